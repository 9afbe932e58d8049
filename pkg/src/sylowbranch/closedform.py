"""Closed formulas and classification rules for linear constituents.

Everything here is a direct statement about multiplicities, implemented
independently of the engine so the two can be played against each other:

  * almost_hook_sbc        -- binomial closed form for the multiplicity of a
                              linear label in an almost hook at n = 2^k;
  * almost_hook_sbc_recursive -- the same value by a one-level recursion
                              whose small cases come from the brute oracle;
  * two_linear_classification / odd_prime_classification -- predicted
                              |Lin| classes (1, small exact value, or "more")
                              with the named witness sets where known;
  * the structural predicates and witness tables used by the k=4
                              classification argument;
  * the small share-sets of linear characters at n = p and in the narrow
                              boxes at n = p^k.
"""

from collections import namedtuple
from functools import cache

from . import characters as ch
from .partitions import (
    almost_hook,
    almost_hook_coordinate,
    check_partition,
    choose,
    conjugate,
    delta,
    hook,
    hook_coordinate,
    in_box,
    in_exceptional_family,
    partitions,
    two_block_decompose,
    two_block_pairs,
)
from .tower import hook_to_linear, linear_label, sgn_twist


def window_base(y):
    """y minus its binary digit sum minus 1 (may be -1 for y in {0,1})."""
    return y - int(y).bit_count() - 1


def _check_grid(k, x, y):
    if k < 2:
        raise ValueError("need k >= 2")
    if not 0 <= x <= 2**k - 4:
        raise ValueError(f"x={x} out of range at k={k}")
    if not 0 <= y <= 2**k - 1:
        raise ValueError(f"y={y} out of range at k={k}")


def almost_hook_sbc(k, x, y):
    """Multiplicity of the hook-y linear label in the almost hook at x, n=2^k.

    Closed form: with B = y - bitsum(y) - 1, the value is
    choose(k-1, x-B) - 1 when x is y-1 or y-2, choose(k-1, x-B) when x lies
    in the window {B, ..., B+k-1} (and is not y-1 or y-2), and 0 otherwise.
    """
    _check_grid(k, x, y)
    base = window_base(y)
    if x in (y - 1, y - 2):
        return choose(k - 1, x - base) - 1
    if base <= x <= base + k - 1:
        return choose(k - 1, x - base)
    return 0


@cache
def _recursion_base(k, x, y):
    """Small-tower values for the recursion, from the brute oracle (not the formula)."""
    from . import oracle

    la = almost_hook(2**k, x)
    return oracle.oracle_linear_multiplicity(la, 2, hook_to_linear(k, y))


@cache
def almost_hook_sbc_recursive(k, x, y):
    """Same multiplicity by one level of restriction through the wreath product.

    The top twist digit j of the target label contributes the plethysm
    coefficient a^la_{(2-j parts), hook(2^{k-1}, z)} with z = floor(y/2), and
    the two almost hooks one level down continue the recursion when their
    coordinate stays in range.  Base cases k <= 3 come from the brute oracle
    so this path stays independent of the closed form.
    """
    _check_grid(k, x, y)
    if k <= 3:
        return _recursion_base(k, x, y)
    z = y // 2
    j = y % 2 if z % 2 == 0 else 1 - y % 2
    la = almost_hook(2**k, x)
    mu = hook(2 ** (k - 1), z)
    total = ch.plethysm_split(la, mu)[j]
    for l in (0, 1):
        if 0 <= x - z - l <= 2 ** (k - 1) - 4:
            total += almost_hook_sbc_recursive(k - 1, x - z - l, z)
    return total


def almost_hook_plethysm_rule(k, x, mu, i):
    """Predicted a^{ah(2^k,x)}_{(h(2,i)), mu} for mu a partition of 2^{k-1}.

    The coefficient is 1 exactly when mu is one of at most two hooks tied to
    x: for even x, the hooks at x/2 and (x+2)/2 with the parity constraint
    x/2 = i mod 2; for odd x, the single hook at (x+1)/2 for both i.
    """
    if not 0 <= x <= 2**k - 4:
        raise ValueError(f"x={x} out of range at k={k}")
    mu = tuple(mu)
    half = 2 ** (k - 1)
    if x % 2 == 0:
        if mu in (hook(half, x // 2), hook(half, (x + 2) // 2)):
            return 1 if (x // 2) % 2 == i % 2 else 0
        return 0
    return 1 if mu == hook(half, (x + 1) // 2) else 0


Outcome = namedtuple("Outcome", "count case witnesses")
# count: "1", an exact integer, or ">2" / ">p"; witnesses: tuple of full
# linear labels (each a tuple of per-factor digit strings) or None.


def _power_of(n, p):
    """k with n = p^k, or None."""
    if n < 1:
        return None
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else None


def _single(digits):
    return ((tuple(digits)),)


def _trivial_witness(n, p):
    from .partitions import sylow_shape

    return tuple((0,) * h for h in sylow_shape(n, p))


def _sign_witness(n):
    from .partitions import sylow_shape

    return tuple(hook_to_linear(h, 2**h - 1) if h else () for h in sylow_shape(n, 2))


_EIGHT_SPORADIC = {
    (5, 3): (1, 2),
    (3, 3, 2): (2, 5),
    (2, 2, 2, 1, 1): (5, 6),
}


def two_linear_classification(n, la):
    """Predicted number of linear constituents at p = 2, with witnesses.

    Returns Outcome(count, case, witnesses); count is "1", "2" or ">2" and
    witnesses (when the count is exact) is the predicted set of full linear
    labels, each a tuple of per-factor digit strings in ascending factor
    order, all with multiplicity 1.
    """
    la = check_partition(la)
    if sum(la) != n:
        raise ValueError(f"|{la}| != {n}")
    if la == (n,):
        return Outcome("1", "trivial-row", (_trivial_witness(n, 2),))
    if la == (1,) * n:
        return Outcome("1", "trivial-column", (_sign_witness(n),))
    k = _power_of(n, 2)
    if k is not None:
        t = hook_coordinate(la)
        if t is not None:
            return Outcome("1", "power-hook", ((hook_to_linear(k, t),),))
        half = n // 2
        if la == almost_hook(n, half - 2):
            ys = (half - 2, half + 1)
            return Outcome(
                "2", "power-almost-hook", tuple((hook_to_linear(k, y),) for y in ys)
            )
        if n == 8 and la in _EIGHT_SPORADIC:
            ys = _EIGHT_SPORADIC[la]
            return Outcome(
                "2", "eight-sporadic", tuple((hook_to_linear(3, y),) for y in ys)
            )
        return Outcome(">2", "power-generic", None)
    k = _power_of(n - 1, 2)
    if k is not None and n > 2:
        t = hook_coordinate(la)
        if t is not None and 1 <= t <= n - 2:
            return Outcome(
                "2",
                "adjacent-hook",
                tuple(((), hook_to_linear(k, yy)) for yy in (t, t - 1)),
            )
        if n == 9 and la == (3, 3, 3):
            return Outcome(
                "2",
                "nine-sporadic",
                tuple(((), hook_to_linear(3, y)) for y in (2, 5)),
            )
        return Outcome(">2", "adjacent-generic", None)
    return Outcome(">2", "generic", None)


def odd_prime_classification(p, n, la):
    """Predicted number of linear constituents for an odd prime p.

    Exact values are "1" for the trivial row/column, p-1 and p in the narrow
    boxes at n = p^k and just above a p-power, the sporadic square at
    (p, n) = (3, 9), and ">p" in all remaining cases.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if n < p:
        raise ValueError(f"n={n} has a trivial Sylow {p}-subgroup")
    la = check_partition(la)
    if sum(la) != n:
        raise ValueError(f"|{la}| != {n}")
    if la in ((n,), (1,) * n):
        return Outcome("1", "trivial", None)
    if _power_of(n, p) is not None:
        if la in ((n - 1, 1), (2,) + (1,) * (n - 2)):
            return Outcome(str(p - 1), "subhook", None)
        if p == 3 and n == 9 and la == (3, 3, 3):
            return Outcome(str(p), "square-sporadic", None)
        if in_box(la, n - 2) and not in_box(la, n - p):
            return Outcome(str(p), "narrow-box", None)
        return Outcome(">p", "power-generic", None)
    remainder = None
    for i in range(1, p):
        if _power_of(n - i, p) is not None and n - i >= p:
            remainder = i
            break
    if remainder is not None:
        if in_box(la, n - 1) and not in_box(la, n - p):
            return Outcome(str(p), "near-power-box", None)
        return Outcome(">p", "near-power-generic", None)
    return Outcome(">p", "generic", None)


def almost_hook_linear_set(k, x):
    """Predicted linear data for the almost hook at (2^k, x).

    At the midpoint x = 2^{k-1} - 2 the set is exactly two labels, both of
    multiplicity 1; everywhere else the verdict is "more than two", returned
    with a triple of hook coordinates y whose multiplicities are positive.
    Coordinates x past the midpoint are handled through conjugation, which
    reflects both x and the witnesses.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    n = 2**k
    if not 0 <= x <= n - 4:
        raise ValueError(f"x={x} out of range at k={k}")
    half = n // 2
    if x == half - 2:
        return ("exact", (half - 2, half + 1))
    if x > half - 2:
        reflected = almost_hook_linear_set(k, n - 4 - x)
        return ("witnesses", tuple(sorted(n - 1 - y for y in reflected[1])))
    special = any(x == 2 ** (l - 1) - 2 for l in range(2, k))
    ys = (x, x + 1, x + 3) if special else (x, x + 1, x + 2)
    return ("witnesses", ys)


def halving_criterion(k, la):
    """Whether both halved shapes land in the hook family (plus one almost hook).

    This is the right-hand side of the equivalence tested at k in {3, 4}:
    delta(la) and delta(la') both lie in the set of hooks of 2^{k-1}
    together with the almost hook at coordinate 2^{k-2} - 2.
    """
    la = check_partition(la)
    if sum(la) != 2**k:
        raise ValueError(f"|{la}| != 2^{k}")
    half = 2 ** (k - 1)
    allowed_extra = almost_hook(half, 2 ** (k - 2) - 2)

    def good(mu):
        return hook_coordinate(mu) is not None or mu == allowed_extra

    return good(delta(la)) and good(delta(conjugate(la)))


def exceptional_shape(k, la):
    """Hook, almost hook, or member of the two-block family at 2^k."""
    la = check_partition(la)
    return (
        hook_coordinate(la) is not None
        or almost_hook_coordinate(la) is not None
        or in_exceptional_family(la, k)
    )


def witness_pair(k, la):
    """The (alpha, beta) pair of half-size shapes prescribed for la in the family.

    Both shapes are prescribed to satisfy c^la_{alpha,alpha} > 0 and
    c^la_{beta,beta} > 0 with |Lin(alpha) u Lin(beta)| > 2 one level down.
    Raises ValueError when la is outside the family, and also for the two
    boundary members ((2^k-3,3) and its conjugate) for which the prescription
    would need an out-of-range almost-hook coordinate and no valid pair
    exists at all.
    """
    la = check_partition(la)
    if k < 4:
        raise ValueError("the witness tables start at k = 4")
    if not in_exceptional_family(la, k):
        raise ValueError(f"{la} is not in the two-block family at 2^{k}")
    mu1, nu = two_block_decompose(la)
    half = 2 ** (k - 1)
    quarter = 2 ** (k - 2)
    paired = {
        (half, (3,)): hook(half, quarter - 1),
        (half, (2, 2)): hook(half, quarter - 1),
        (half - 1, (4,)): hook(half, quarter - 1),
        (half - 1, (2, 2)): hook(half, quarter),
        (half - 1, (2, 2, 2)): hook(half, quarter),
        (half - 1, (3,)): hook(half, quarter),
        (half - 1, (3, 2)): hook(half, quarter),
    }
    alpha = paired.get((mu1, nu))
    if alpha is not None:
        return alpha, almost_hook(half, quarter - 2)
    if (mu1, nu) in (
        (half, (4,)),
        (half, (4, 2)),
        (half - 1, (5,)),
        (half - 1, (5, 2)),
    ):
        x = quarter - 3
    elif (mu1, nu) in (
        (half - 2, (2, 2, 2)),
        (half - 2, (2, 2, 2, 2)),
        (half - 3, (3, 2, 2)),
        (half - 3, (3, 2, 2, 2)),
    ):
        x = quarter - 1
    elif mu1 % 2 and nu in ((3,), (3, 2)):
        x = half - (mu1 - 3) // 2 - 4
    elif mu1 % 2 == 0 and nu == (2, 2):
        x = half - mu1 // 2 - 2
    else:
        raise ValueError(f"no table row covers {la}")
    if not 0 <= x <= half - 4:
        raise ValueError(
            f"no valid prescription exists for {la}: the table coordinate {x} "
            f"is out of range (boundary member of the family)"
        )
    alpha = almost_hook(half, x)
    return alpha, alpha


def cyclic_share_set(p, i):
    """Shapes of p whose restriction to C_p contains the i-th linear character.

    All partitions of p except a single conjugate pair: the near-trivial pair
    for i = 0, the one-row/one-column pair otherwise.
    """
    if p < 3 or not 0 <= i <= p - 1:
        raise ValueError("need an odd prime p and 0 <= i < p")
    excluded = (
        {(p - 1, 1), (2,) + (1,) * (p - 2)} if i == 0 else {(p,), (1,) * p}
    )
    return frozenset(partitions(p)) - excluded


def psi_digits(p, k, i):
    """Digit string of the i-th top-twisted linear label (0, ..., 0, i)."""
    if not 0 <= i < p:
        raise ValueError(f"digit {i} out of range mod {p}")
    return (0,) * (k - 1) + (i,)


def narrow_box_lin_set(p, k, la):
    """Predicted full Lin set at n = p^k for the narrow-box shapes, else None.

    The sub-hook (p^k - 1, 1) and its conjugate see exactly the top twists
    with nonzero digit; every shape lying in the (n-2)-box but not in the
    (n-p)-box sees all p top twists.
    """
    la = check_partition(la)
    n = p**k
    if sum(la) != n:
        raise ValueError(f"|{la}| != {p}^{k}")
    if la in ((n - 1, 1), (2,) + (1,) * (n - 2)):
        return frozenset(psi_digits(p, k, i) for i in range(1, p))
    if in_box(la, n - 2) and not in_box(la, n - p):
        return frozenset(psi_digits(p, k, i) for i in range(p))
    return None
