"""Brute-force ground truth, independent of the engine's recursion.

Two routes:

  * direct inner products over the explicit elements of the Sylow subgroup,
    exact in the cyclotomic integers Z[zeta_p] (integer accumulators per
    power of zeta, reduced in the power basis; a result must come out
    rational-integral and divisible by the group order);

  * a monomial-expansion plethysm oracle for s_(2) o s_mu and s_(1,1) o s_mu
    with |mu| <= 4: expand s_mu as a sum of monomials over semistandard
    tableaux, square / substitute x -> x^2, and read off Schur coefficients
    by triangular elimination against Kostka numbers.

Everything here deliberately avoids the engine and the lattice-filling code
paths in characters (only character values are shared, and those are pinned
separately by orthogonality tests).
"""

from collections import Counter, defaultdict
from functools import cache

from . import tower as tw
from .characters import character_value, sn_degree
from .partitions import check_partition, partitions, sylow_shape


# ---------------------------------------------------------------- cyclotomics

def _zeta_mul_root(p, vec, e):
    """Multiply an exponent vector by zeta^e."""
    out = [0] * p
    for i, c in enumerate(vec):
        if c:
            out[(i + e) % p] += c
    return tuple(out)


def _zeta_mul(p, a, b):
    out = [0] * p
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            if d:
                out[(i + j) % p] += c * d
    return tuple(out)


def _zeta_conj(p, vec):
    return tuple(vec[(-i) % p] for i in range(p))


def _zeta_int(vec):
    """Reduce an exponent vector to a rational integer, or fail loudly.

    Using 1 + zeta + ... + zeta^{p-1} = 0, the vector is integral exactly
    when all coordinates past the first agree.
    """
    if any(c != vec[1] for c in vec[2:]):
        raise ArithmeticError(f"cyclotomic sum is not rational: {vec}")
    return vec[0] - vec[1]


def _zeta_one(p, scale=1):
    return (scale,) + (0,) * (p - 1)


# --------------------------------------------------- inner products over P_n

@cache
def _signature_buckets(n, p):
    """Counter of (cycle type, per-factor signature) over the Sylow subgroup."""
    return Counter(tw.sylow_elements(n, p))


def oracle_linear_multiplicity(la, p, psi, budget=None):
    """<chi^la restricted, psi> by direct summation, psi a linear label.

    psi is a digit tuple (single tower factor) or tuple of per-factor digit
    tuples, ascending factor order.  The sum is grouped by (cycle type,
    signature) since the summand only depends on those.
    """
    la = check_partition(la)
    n = sum(la)
    heights = sylow_shape(n, p)
    psi = tuple(psi)
    if len(heights) == 1 and (not psi or isinstance(psi[0], int)):
        psi = (psi,)
    psi = tuple(tuple(f) for f in psi)
    if len(psi) != len(heights) or any(len(f) != h for f, h in zip(psi, heights)):
        raise ValueError(f"label {psi} does not match factor heights {heights}")
    order = tw.sylow_order(n, p)
    if budget is not None and order > budget:
        raise tw.BudgetExceeded(f"|P_{n}| = {order} exceeds the budget {budget}")
    acc = [0] * p
    for (ct, sigs), count in _signature_buckets(n, p).items():
        chi = character_value(la, ct)
        if not chi:
            continue
        e = 0
        for digits, sig in zip(psi, sigs):
            e += sum(d * s for d, s in zip(digits, sig))
        acc[(-e) % p] += count * chi
    total = _zeta_int(tuple(acc))
    mult, rem = divmod(total, order)
    if rem:
        raise ArithmeticError(f"inner product not divisible by |P|: {la}, {psi}")
    return mult


@cache
def _tower_element_data(p, k):
    """(element, cycle type) for every element of the height-k tower."""
    return tuple(
        (el, tw.perm_cycle_type(tw.element_perm(p, el)))
        for el in tw.tower_elements(p, k)
    )


@cache
def _label_value(p, label, el):
    """Character value of a tower label at an element, in Z[zeta_p].

    Twisted labels evaluate through the cycle product when the top shift is
    nonzero; induced labels vanish off the base subgroup and otherwise sum
    the factor products over the p rotations.
    """
    if label == tw.LEAF:
        return _zeta_one(p)
    children, s = el if el else ((), 0)
    if tw.is_orbit(label):
        subs = label[1:]
        if s:
            return (0,) * p
        acc = [0] * p
        for j in range(p):
            term = _zeta_one(p)
            for i, sub in enumerate(subs):
                term = _zeta_mul(p, term, _label_value(p, sub, children[(i + j) % p]))
            for i, c in enumerate(term):
                acc[i] += c
        return tuple(acc)
    inner, t = label
    if s == 0:
        term = _zeta_one(p)
        for child in children:
            term = _zeta_mul(p, term, _label_value(p, inner, child))
        return term
    q = children[0]
    for j in range(1, p):
        q = tw.element_mul(p, children[(j * s) % p], q)
    return _zeta_mul_root(p, _label_value(p, inner, q), (t * s) % p)


def oracle_full_restriction(la, p, budget=None):
    """Full decomposition of la over the tower labels by inner products.

    Only for |la| = p^k within the element budget; asserts dimension
    conservation on its own result.
    """
    import os

    la = check_partition(la)
    n = sum(la)
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"full oracle needs |la| a power of {p}, got {n}")
    if budget is None:
        budget = int(os.environ.get("SYLOW_BRANCH_BUDGET", 2**20))
    order = tw.sylow_order(n, p)
    if order > budget:
        raise tw.BudgetExceeded(f"|P_{n}| = {order} exceeds the budget {budget}")
    data = _tower_element_data(p, k)
    vec = {}
    for label in tw.irr_labels(p, k):
        acc = [0] * p
        for el, ct in data:
            chi = character_value(la, ct)
            if not chi:
                continue
            val = _zeta_conj(p, _label_value(p, label, el))
            for i, c in enumerate(val):
                if c:
                    acc[i] += chi * c
        total = _zeta_int(tuple(acc))
        mult, rem = divmod(total, order)
        if rem or mult < 0:
            raise ArithmeticError(f"bad oracle multiplicity for {la}, {label}")
        if mult:
            vec[label] = mult
    degree = sum(m * tw.label_degree(p, lab) for lab, m in vec.items())
    if degree != sn_degree(la):
        raise ArithmeticError(f"oracle dimension check failed for {la}")
    return vec


# ------------------------------------------------- monomial plethysm oracle

def _ssyt_monomials(shape, nvars):
    """Monomial expansion of the Schur polynomial: dict exponent -> count.

    Straight-shape semistandard tableaux with entries <= nvars; exponents are
    full length-nvars tuples.
    """
    shape = tuple(shape)
    counts = [0] * (nvars + 1)
    grid = {}
    out = defaultdict(int)
    cells = [(r, c) for r, part in enumerate(shape) for c in range(part)]

    def fill(pos):
        if pos == len(cells):
            out[tuple(counts[1:])] += 1
            return
        r, c = cells[pos]
        lo = grid[r, c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1, c] + 1)
        for v in range(lo, nvars + 1):
            grid[r, c] = v
            counts[v] += 1
            fill(pos + 1)
            counts[v] -= 1
        grid.pop((r, c), None)

    fill(0)
    return dict(out)


@cache
def _kostka(shape, content):
    """Number of semistandard tableaux of the given shape and content."""
    shape, content = tuple(shape), tuple(content)
    if sum(shape) != sum(content):
        return 0
    nvars = len(content)
    counts = [0] * (nvars + 1)
    grid = {}
    hits = 0
    cells = [(r, c) for r, part in enumerate(shape) for c in range(part)]

    def fill(pos):
        nonlocal hits
        if pos == len(cells):
            hits += 1
            return
        r, c = cells[pos]
        lo = grid[r, c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1, c] + 1)
        for v in range(lo, nvars + 1):
            if counts[v] >= content[v - 1]:
                continue
            grid[r, c] = v
            counts[v] += 1
            fill(pos + 1)
            counts[v] -= 1
        grid.pop((r, c), None)

    fill(0)
    return hits


def _poly_square(poly):
    out = defaultdict(int)
    items = list(poly.items())
    for i, (ea, ca) in enumerate(items):
        for eb, cb in items:
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def _schur_expand(poly, total, nvars):
    """Schur coefficients of a symmetric polynomial by Kostka elimination.

    Only monomials whose exponent is already a partition matter; processing
    partitions in descending lex order makes the Kostka system triangular.
    """
    coeffs = {}
    residue = {
        exp: c
        for exp, c in poly.items()
        if all(exp[i] >= exp[i + 1] for i in range(len(exp) - 1))
    }

    def strip(exp):
        while exp and exp[-1] == 0:
            exp = exp[:-1]
        return exp

    residue = {strip(exp): c for exp, c in residue.items()}
    for alpha in partitions(total):
        if len(alpha) > nvars:
            continue
        c = residue.get(alpha, 0)
        if not c:
            continue
        coeffs[alpha] = c
        for beta in partitions(total):
            if len(beta) > nvars:
                continue
            kn = _kostka(alpha, beta)
            if kn:
                residue[beta] = residue.get(beta, 0) - c * kn
    leftovers = {exp: c for exp, c in residue.items() if c}
    if leftovers:
        raise ArithmeticError(f"non-symmetric residue in Schur expansion: {leftovers}")
    return coeffs


@cache
def _plethysm_expansion(kind, mu):
    """Schur expansion of s_(2) o s_mu (kind "sym") or s_(1,1) o s_mu (kind "alt")."""
    mu = tuple(mu)
    total = 2 * sum(mu)
    nvars = total
    base = _ssyt_monomials(mu, nvars)
    squared = _poly_square(base)
    doubled = {tuple(2 * e for e in exp): c for exp, c in base.items()}
    combined = defaultdict(int, squared)
    sign = 1 if kind == "sym" else -1
    for exp, c in doubled.items():
        combined[exp] += sign * c
    halved = {}
    for exp, c in combined.items():
        q, r = divmod(c, 2)
        if r:
            raise ArithmeticError("plethysm expansion is not integral")
        if q:
            halved[exp] = q
    return _schur_expand(halved, total, nvars)


def oracle_plethysm_coefficient(nu, mu, la):
    """a^la_{nu,mu} for nu in {(2), (1,1)} via plain monomial expansion."""
    nu, mu, la = tuple(nu), tuple(mu), tuple(la)
    if sum(mu) > 4:
        raise ValueError("monomial oracle is limited to |mu| <= 4")
    if sum(la) != 2 * sum(mu):
        raise ValueError("need |la| = 2|mu|")
    if nu == (2,):
        kind = "sym"
    elif nu == (1, 1):
        kind = "alt"
    else:
        raise ValueError(f"outer shape must be (2) or (1,1), got {nu}")
    return _plethysm_expansion(kind, mu).get(la, 0)
