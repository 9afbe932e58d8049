"""Symmetric group character combinatorics, all in exact integer arithmetic.

Littlewood-Richardson coefficients come from counting lattice skew fillings,
character values from recursive border-strip removal on beta-sets, and the
two plethysm coefficients a^la_{(2),mu} / a^la_{(1,1),mu} from the identity

    s_mu * s_mu = (s_(2) o s_mu) + (s_(1,1) o s_mu)

combined with the stretched inner product <s_mu[p_2], s_la>, so everything
reduces to fillings and character values.  The heavy entry points are
memoized; callers must treat returned dicts as read-only.
"""

from collections import Counter, defaultdict
from functools import cache
from math import factorial

from .partitions import check_partition, partitions


@cache
def sn_degree(la):
    """Dimension of the irreducible character of S_|la| labelled by la."""
    n = sum(la)
    prod = 1
    cols = [sum(1 for part in la if part > c) for c in range(la[0])] if la else []
    for r, part in enumerate(la):
        for c in range(part):
            prod *= part - c + cols[c] - r - 1
    return factorial(n) // prod


def centralizer_order(ct):
    """|C_{S_n}(g)| = prod i^{m_i} m_i! for an element of cycle type ct."""
    z = 1
    for length, count in Counter(ct).items():
        z *= length**count * factorial(count)
    return z


def _strip_removals(la, length):
    """All ways to strip a border strip of the given length off la.

    Yields (smaller partition, sign) with sign = (-1)^(rows spanned - 1),
    computed on the beta-set: removing a strip moves one beta number down by
    `length`, and the height counts the beta numbers jumped over.
    """
    r = len(la)
    beta = [la[i] + r - 1 - i for i in range(r)]
    present = set(beta)
    out = []
    for b in beta:
        c = b - length
        if c < 0 or c in present:
            continue
        height = sum(1 for x in beta if c < x < b)
        newbeta = sorted((present - {b}) | {c}, reverse=True)
        mu = tuple(x - (r - 1 - i) for i, x in enumerate(newbeta))
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        out.append((mu, -1 if height % 2 else 1))
    return out


@cache
def _mn(la, ct):
    if not ct:
        return 1 if not la else 0
    total = 0
    rest = ct[1:]
    for mu, sign in _strip_removals(la, ct[0]):
        total += sign * _mn(mu, rest)
    return total


def character_value(la, ct):
    """Character value of la at the class with cycle type ct (same size)."""
    if sum(la) != sum(ct):
        raise ValueError(f"cycle type {ct} does not match |{la}|")
    return _mn(tuple(la), tuple(sorted(ct, reverse=True)))


def _lattice_fillings(la, mu, target=None):
    """Count lattice skew fillings of la/mu, bucketed by content.

    Fillings are weakly increasing along rows, strictly increasing down
    columns, and their reverse row word (rows top to bottom, each read right
    to left) stays a ballot sequence, which is exactly the lattice condition
    enforced incrementally below.  With target set, only fillings of that
    content are counted and the return value is a bare integer.
    """
    rows = len(la)
    cells = []
    for r in range(rows):
        inner = mu[r] if r < len(mu) else 0
        if inner > la[r]:
            return 0 if target is not None else {}
        for c in range(la[r] - 1, inner - 1, -1):
            cells.append((r, c, inner))
    if not cells:
        return 1 if target == () else ({(): 1} if target is None else 0)

    maxval = len(target) if target is not None else rows
    counts = [0] * (maxval + 1)
    grid = {}
    buckets = defaultdict(int)
    hits = 0

    def fill(pos):
        nonlocal hits
        if pos == len(cells):
            content = tuple(counts[1 : maxval + 1])
            while content and content[-1] == 0:
                content = content[:-1]
            if target is None:
                buckets[content] += 1
            else:
                hits += 1
            return
        r, c, inner = cells[pos]
        lo = 1
        if r > 0 and c >= (mu[r - 1] if r - 1 < len(mu) else 0):
            lo = grid[r - 1, c] + 1
        hi = min(r + 1, maxval)
        if c + 1 < la[r]:
            hi = min(hi, grid[r, c + 1])
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if target is not None and counts[v] >= target[v - 1]:
                continue
            counts[v] += 1
            grid[r, c] = v
            fill(pos + 1)
            counts[v] -= 1
        grid.pop((r, c), None)

    fill(0)
    if target is None:
        return dict(buckets)
    return hits


def lr_coefficient(la, mu, nu):
    """Littlewood-Richardson coefficient c^la_{mu,nu}."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    if sum(mu) + sum(nu) != sum(la):
        raise ValueError("sizes must satisfy |mu| + |nu| = |la|")
    if len(mu) > len(la):
        return 0
    return _lattice_fillings(la, mu, target=nu)


def subshapes(la, size):
    """All partitions mu of the given size with mu contained in la."""
    out = []
    acc = []
    total = [0] * (len(la) + 1)
    for i in range(len(la) - 1, -1, -1):
        total[i] = total[i + 1] + la[i]

    def rec(row, prev, remaining):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if row == len(la) or remaining > total[row]:
            return
        for part in range(min(prev, la[row], remaining), 0, -1):
            acc.append(part)
            rec(row + 1, part, remaining - part)
            acc.pop()

    rec(0, la[0] if la else 0, size)
    return tuple(out)


@cache
def split_pairs(la, m):
    """Restriction of la to S_m x S_{n-m}: dict (mu, nu) -> c^la_{mu,nu}.

    Enumerates sub-shapes on the smaller side and buckets the lattice
    fillings of the complement by content, so the work is the same whichever
    factor is smaller.
    """
    n = sum(la)
    if not 0 <= m <= n:
        raise ValueError(f"block size {m} out of range for |la| = {n}")
    small = min(m, n - m)
    table = {}
    for inner in subshapes(la, small):
        for content, cnt in _lattice_fillings(la, inner).items():
            key = (inner, content) if small == m else (content, inner)
            table[key] = cnt
    return table


def young_decompose(la, sizes):
    """Restriction of la to the Young subgroup with the given block sizes.

    Returns a dict mapping ordered tuples (mu_1, ..., mu_r), aligned with
    `sizes`, to their multiplicities.  Peels the last block off first.
    """
    sizes = tuple(sizes)
    if sum(sizes) != sum(la):
        raise ValueError("block sizes must sum to |la|")
    if len(sizes) == 1:
        return {(tuple(la),): 1}
    out = defaultdict(int)
    for (mu, rest), c in split_pairs(tuple(la), sizes[-1]).items():
        for tup, c2 in young_decompose(rest, sizes[:-1]).items():
            out[tup + (mu,)] += c * c2
    return dict(out)


def lr_multi(la, factors):
    """Multiplicity of chi^{mu_1} x ... x chi^{mu_r} in la restricted."""
    factors = [tuple(mu) for mu in factors]
    if sum(map(sum, factors)) != sum(la):
        raise ValueError("factor sizes must sum to |la|")
    if len(factors) == 1:
        return 1 if tuple(la) == factors[0] else 0
    total = 0
    for (mu, rest), c in split_pairs(tuple(la), sum(factors[-1])).items():
        if mu == factors[-1]:
            total += c * lr_multi(rest, factors[:-1])
    return total


def stretch_coefficient(la, mu, p):
    """Coefficient of s_la in s_mu evaluated on p-th power sums, <s_mu[p_p], s_la>.

    Equals sum over cycle types ct of |mu| of chi^la(p*ct) chi^mu(ct) / z_ct,
    always an integer; non-integrality aborts loudly since every downstream
    multiplicity would be corrupted.
    """
    la, mu = tuple(la), tuple(mu)
    if sum(la) != p * sum(mu):
        raise ValueError("need |la| = p * |mu|")
    m = sum(mu)
    num = 0
    for ct in partitions(m):
        stretched = tuple(p * part for part in ct)
        classes = factorial(m) // centralizer_order(ct)
        num += classes * character_value(la, stretched) * character_value(mu, ct)
    q, r = divmod(num, factorial(m))
    if r:
        raise ArithmeticError(f"stretched pairing not integral at {la}, {mu}, p={p}")
    return q


def plethysm_split(la, mu):
    """(a^la_{(2),mu}, a^la_{(1,1),mu}), the two degree-2 plethysm coefficients.

    a2 = (c^la_{mu,mu} + D)/2 and a11 = (c^la_{mu,mu} - D)/2 where D is the
    stretched pairing at p=2; both halves must come out as nonnegative
    integers or the computation is broken.
    """
    la, mu = check_partition(la), check_partition(mu)
    if sum(la) != 2 * sum(mu):
        raise ValueError("need |la| = 2|mu|")
    c = lr_coefficient(la, mu, mu)
    d = stretch_coefficient(la, mu, 2)
    a2, r2 = divmod(c + d, 2)
    a11, r11 = divmod(c - d, 2)
    if r2 or r11 or a2 < 0 or a11 < 0:
        raise ArithmeticError(f"bad plethysm split at {la}, {mu}: c={c}, D={d}")
    return a2, a11
