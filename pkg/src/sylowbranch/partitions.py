"""Integer partitions and the shape families the restriction machinery works over.

Partitions are plain tuples of weakly decreasing positive ints.  Besides the
basic operations (conjugation, enumeration, text parsing) this module knows
the special shapes that appear throughout the multiplicity formulas: hooks
(n-x, 1^x), almost hooks (n-2-x, 2, 1^x), the square-box families B_n(t),
the halving map delta on partitions of even numbers, and the exceptional
two-block family used by the k=4 classification arguments.
"""

from functools import cache
from math import comb


def check_partition(parts):
    """Validate an iterable of parts and return it as a canonical tuple.

    Raises ValueError unless the parts are positive and weakly decreasing.
    """
    la = tuple(int(x) for x in parts)
    prev = None
    for part in la:
        if part <= 0:
            raise ValueError(f"partition parts must be positive, got {part}")
        if prev is not None and part > prev:
            raise ValueError(f"partition parts must be weakly decreasing, got {la}")
        prev = part
    return la


def parse_partition(text):
    """Parse comma-separated parts with exponent shorthand, e.g. "8,2,1^6"."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty part in partition text {text!r}")
        if "^" in token:
            base, _, exp = token.partition("^")
            try:
                b, e = int(base), int(exp)
            except ValueError:
                raise ValueError(f"bad partition token {token!r}") from None
            if e < 0:
                raise ValueError(f"negative exponent in {token!r}")
            parts.extend([b] * e)
        else:
            try:
                parts.append(int(token))
            except ValueError:
                raise ValueError(f"bad partition token {token!r}") from None
    return check_partition(parts)


def format_partition(la):
    """Inverse of parse_partition, without the exponent shorthand."""
    return ",".join(str(part) for part in la)


@cache
def partitions(n, max_part=None):
    """All partitions of n (parts bounded by max_part), in descending lex order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(la):
    """Transpose of the Young diagram."""
    if not la:
        return ()
    return tuple(sum(1 for part in la if part > i) for i in range(la[0]))


def classify_shape(la):
    """One of "wide", "tall", "self-conjugate" by the first row/column comparison.

    Wide means la beats its conjugate at the first index where they differ.
    """
    mu = conjugate(la)
    if la == mu:
        return "self-conjugate"
    return "wide" if la > mu else "tall"


def hook(n, x):
    """The hook (n-x, 1^x); requires 0 <= x <= n-1."""
    if not 0 <= x <= n - 1:
        raise ValueError(f"hook coordinate x={x} out of range for n={n}")
    return (n - x,) + (1,) * x


def hook_coordinate(la):
    """x such that la = hook(|la|, x), or None if la is not a hook."""
    if not la or any(part != 1 for part in la[1:]):
        return None
    return len(la) - 1


def is_hook(la):
    return hook_coordinate(la) is not None


def almost_hook(n, x):
    """The almost hook (n-2-x, 2, 1^x); requires n >= 4 and 0 <= x <= n-4."""
    if not 0 <= x <= n - 4:
        raise ValueError(f"almost-hook coordinate x={x} out of range for n={n}")
    return (n - 2 - x, 2) + (1,) * x


def almost_hook_coordinate(la):
    """x such that la = almost_hook(|la|, x), or None."""
    if len(la) < 2 or la[1] != 2 or any(part != 1 for part in la[2:]):
        return None
    x = len(la) - 2
    return x if la[0] >= 2 else None


def is_almost_hook(la):
    return almost_hook_coordinate(la) is not None


def in_box(la, t):
    """Whether la fits in the t x t box: first part and length both <= t."""
    return (la[0] if la else 0) <= t and len(la) <= t


def box_partitions(n, t):
    """All la of n inside the t x t box."""
    return tuple(la for la in partitions(n, t) if len(la) <= t)


def union_parts(*las):
    """Multiset union of part lists, sorted back into a partition."""
    merged = [part for la in las for part in la]
    return tuple(sorted(merged, reverse=True))


def delta(la):
    """Halve a partition of an even number part by part.

    Even parts are halved; the odd parts (necessarily evenly many) are paired
    up in decreasing order and replaced alternately by (part+1)/2, (part-1)/2.
    Zeros are dropped and the result is sorted.  |delta(la)| = |la| / 2.
    """
    odds = [part for part in la if part % 2]
    if len(odds) % 2:
        raise ValueError(f"delta needs an even partition, got {la}")
    halves = [part // 2 for part in la if part % 2 == 0]
    for pos, part in enumerate(odds):
        halves.append((part + 1) // 2 if pos % 2 == 0 else (part - 1) // 2)
    return tuple(sorted((h for h in halves if h), reverse=True))


@cache
def two_block_pairs(k):
    """The (first part, middle block) pairs of the exceptional family at 2^k.

    Members are the lambda = (mu1) U nu U (1^m) with m >= 0 from six families
    (mu1 is the single leading part, nu the block of parts >= 2 after it):

      a) mu1 = 2^{k-1},     nu in {(3), (4), (4,2)}
      b) mu1 = 2^{k-1} - 1, nu in {(4), (5), (5,2), (2,2), (2,2,2)}
      c) mu1 = 2^{k-1} - 2, nu in {(2,2,2), (2,2,2,2)}
      d) mu1 = 2^{k-1} - 3, nu in {(3,2,2), (3,2,2,2)}
      e) mu1 = 2r + 3 odd (r >= 0), nu in {(3), (3,2)}
      f) mu1 = 2r even (r >= 1),    nu = (2,2)

    subject to mu1 >= nu_1 and mu1 + |nu| <= 2^k.
    """
    n = 2**k
    half = n // 2
    raw = []
    for nu in ((3,), (4,), (4, 2)):
        raw.append((half, nu))
    for nu in ((4,), (5,), (5, 2), (2, 2), (2, 2, 2)):
        raw.append((half - 1, nu))
    for nu in ((2, 2, 2), (2, 2, 2, 2)):
        raw.append((half - 2, nu))
    for nu in ((3, 2, 2), (3, 2, 2, 2)):
        raw.append((half - 3, nu))
    for r in range((n - 6) // 2 + 1):
        raw.append((2 * r + 3, (3,)))
        raw.append((2 * r + 3, (3, 2)))
    for r in range(1, (n - 4) // 2 + 1):
        raw.append((2 * r, (2, 2)))
    pairs = set()
    for mu1, nu in raw:
        if mu1 >= nu[0] and mu1 >= 1 and mu1 + sum(nu) <= n:
            pairs.add((mu1, nu))
    return frozenset(pairs)


def two_block_decompose(la):
    """Split la as (first part, block of later parts >= 2); the 1-tail is implied."""
    if not la:
        raise ValueError("empty partition has no leading part")
    return la[0], tuple(part for part in la[1:] if part >= 2)


def in_exceptional_family(la, k):
    """Membership of la (a partition of 2^k) in the two-block family."""
    if sum(la) != 2**k:
        return False
    if len(la) < 2:
        return False
    return two_block_decompose(la) in two_block_pairs(k)


@cache
def exceptional_family(k):
    """The family at 2^k built directly from the (mu1, nu) pairs."""
    n = 2**k
    shapes = set()
    for mu1, nu in two_block_pairs(k):
        tail = n - mu1 - sum(nu)
        shapes.add(union_parts((mu1,), nu, (1,) * tail))
    return frozenset(shapes)


def choose(a, b):
    """Binomial coefficient with the out-of-range-is-zero convention."""
    return comb(a, b) if 0 <= b <= a else 0


def sylow_shape(n, p):
    """Tower heights of the Sylow p-subgroup factors of S_n, ascending.

    Digit a_i of the base-p expansion contributes i repeated a_i times; the
    Sylow subgroup is the direct product of the corresponding towers.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    heights = []
    i = 0
    while n:
        n, digit = divmod(n, p)
        heights.extend([i] * digit)
        i += 1
    return tuple(heights)
