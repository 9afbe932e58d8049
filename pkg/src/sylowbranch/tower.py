"""Sylow p-subgroup towers of symmetric groups.

The Sylow p-subgroup of S_{p^k} is the iterated wreath product
P_{p^k} = P_{p^{k-1}} wr C_p; its irreducible characters are labelled
recursively here by

  * LEAF            -- the unique character of P_1,
  * (inner, t)      -- the extension of inner x ... x inner twisted by the
                       t-th character of the top C_p (degree deg(inner)^p),
  * ("orb", l_1..l_p) -- induced from a non-constant p-tuple of labels on the
                       base subgroup (degree p * prod deg(l_i)), stored as
                       the lexicographically least rotation.

Linear labels are nested twist chains, identified with digit strings
(d_1, ..., d_k), innermost digit first.  For p = 2 the degree-2^k hooks
biject onto these digit strings; the bijection and its sign twist live here.
The module also provides the explicit permutation model of P_n inside S_n
used by the brute-force oracle, with elements carried as nested
(children, top-cycle) pairs.
"""

from functools import cache
from itertools import product

from .partitions import sylow_shape

LEAF = ()


class BudgetExceeded(RuntimeError):
    """Raised when an element enumeration would exceed the configured budget."""


def twist(inner, t):
    """The label X(inner; phi_t)."""
    return (inner, t)


def is_twist(label):
    return len(label) == 2 and isinstance(label[1], int)


def orbit(labels):
    """Induced label for a non-constant tuple, canonicalized by least rotation.

    Rotations are compared through label_text so that mixed-type nested
    tuples never get compared directly.
    """
    labels = tuple(labels)
    if len(set(labels)) == 1:
        raise ValueError("orbit tuples must not be constant")
    rotations = [labels[i:] + labels[:i] for i in range(len(labels))]
    least = min(rotations, key=lambda rot: tuple(label_text(sub) for sub in rot))
    return ("orb",) + least


def is_orbit(label):
    return bool(label) and label[0] == "orb"


def linear_label(digits):
    """Nested twist chain for a digit string, innermost digit first."""
    label = LEAF
    for d in digits:
        label = (label, d)
    return label


def linear_digits(label):
    """Digit string of a linear label, or None when the label is not linear."""
    digits = []
    while label != LEAF:
        if not is_twist(label):
            return None
        label, d = label[0], label[1]
        digits.append(d)
    return tuple(reversed(digits))


@cache
def label_degree(p, label):
    if label == LEAF:
        return 1
    if is_orbit(label):
        deg = p
        for sub in label[1:]:
            deg *= label_degree(p, sub)
        return deg
    return label_degree(p, label[0]) ** p


@cache
def irr_labels(p, k):
    """All irreducible-character labels of the height-k tower, sorted.

    Count satisfies |Irr(k)| = (m^p - m)/p + p*m with m = |Irr(k-1)|.
    """
    if k == 0:
        return (LEAF,)
    below = irr_labels(p, k - 1)
    labels = set()
    for inner in below:
        for t in range(p):
            labels.add(twist(inner, t))
    for combo in product(below, repeat=p):
        if len(set(combo)) > 1:
            labels.add(orbit(combo))
    return tuple(sorted(labels, key=lambda lab: (label_degree(p, lab), label_text(lab))))


def linear_labels(p, k):
    """All p^k digit strings, lexicographically."""
    return tuple(product(range(p), repeat=k))


def label_text(label):
    """Dotted-digit / bracket text form: "0.1.1", "[e,0]", "[0,1].1", "e"."""
    if label == LEAF:
        return "e"
    if is_orbit(label):
        return "[" + ",".join(label_text(sub) for sub in label[1:]) + "]"
    inner, t = label
    if inner == LEAF:
        return str(t)
    return label_text(inner) + "." + str(t)


def parse_label(text):
    """Inverse of label_text."""
    text = text.strip()
    pos = 0

    def atom():
        nonlocal pos
        if pos < len(text) and text[pos] == "e":
            pos += 1
            return LEAF
        if pos < len(text) and text[pos] == "[":
            pos += 1
            subs = [chain()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                subs.append(chain())
            if pos >= len(text) or text[pos] != "]":
                raise ValueError(f"unclosed orbit bracket in {text!r}")
            pos += 1
            return orbit(subs)
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ValueError(f"bad label text {text!r} at position {pos}")
        return twist(LEAF, int(text[start:pos]))

    def chain():
        nonlocal pos
        label = atom()
        while pos < len(text) and text[pos] == ".":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise ValueError(f"dangling dot in label text {text!r}")
            label = twist(label, int(text[start:pos]))
        return label

    label = chain()
    if pos != len(text):
        raise ValueError(f"trailing junk in label text {text!r}")
    return label


def hook_to_linear(k, y):
    """Digit string of the unique linear constituent of the hook (2^k-y, 1^y).

    Recursively, the outermost digit j satisfies y = 2i + j when i is even
    and y = 2i + 1 - j when i is odd, where i indexes the hook one level
    down; the base case is the digit (y) at k = 1.
    """
    if not 0 <= y <= 2**k - 1:
        raise ValueError(f"hook coordinate y={y} out of range at k={k}")
    if k <= 1:
        return (y,) if k else ()
    i = y // 2
    j = y % 2 if i % 2 == 0 else 1 - y % 2
    return hook_to_linear(k - 1, i) + (j,)


def linear_to_hook(k, digits):
    """Inverse of hook_to_linear."""
    digits = tuple(digits)
    if len(digits) != k or any(d not in (0, 1) for d in digits):
        raise ValueError(f"need {k} binary digits, got {digits}")
    if k <= 1:
        return digits[0] if k else 0
    i = linear_to_hook(k - 1, digits[:-1])
    j = digits[-1]
    return 2 * i + j if i % 2 == 0 else 2 * i + 1 - j


def sgn_twist(k, digits):
    """Multiply a linear label of the 2^k tower by the sign restriction.

    In hook coordinates this is y -> 2^k - 1 - y; a fixed-point-free
    involution on digit strings.
    """
    return hook_to_linear(k, 2**k - 1 - linear_to_hook(k, digits))


def sylow_order(n, p):
    """Order of the Sylow p-subgroup of S_n (Legendre's formula)."""
    e = 0
    q = p
    while q <= n:
        e += n // q
        q *= p
    return p**e


@cache
def tower_elements(p, k):
    """All elements of the height-k tower as nested (children, s) pairs."""
    if k == 0:
        return ((),)
    below = tower_elements(p, k - 1)
    return tuple(
        (children, s) for children in product(below, repeat=p) for s in range(p)
    )


def element_perm(p, el):
    """The permutation of {0..p^k-1} an element induces, as a tuple of images.

    Blocks of size p^{k-1} are rotated by the top cycle s and each image
    block is then permuted by the corresponding child.
    """
    if el == ():
        return (0,)
    children, s = el
    child_perms = [element_perm(p, c) for c in children]
    m = len(child_perms[0])
    perm = [0] * (p * m)
    for i in range(p):
        j = (i + s) % p
        block = child_perms[j]
        base = j * m
        off = i * m
        for r in range(m):
            perm[off + r] = base + block[r]
    return tuple(perm)


def element_signature(p, el):
    """Per-level digit sums (sigma_1, ..., sigma_k) mod p, innermost first.

    A linear label with digits (d_1..d_k) takes the value
    omega^(sum d_j sigma_j) at the element, omega a fixed primitive p-th
    root of unity.
    """
    if el == ():
        return ()
    children, s = el
    subs = [element_signature(p, c) for c in children]
    levels = tuple(sum(col) % p for col in zip(*subs))
    return levels + (s % p,)


def element_mul(p, a, b):
    """Group product: apply b first, then a."""
    if a == ():
        return ()
    ach, asft = a
    bch, bsft = b
    children = tuple(
        element_mul(p, ach[i], bch[(i - asft) % p]) for i in range(p)
    )
    return (children, (asft + bsft) % p)


def perm_cycle_type(perm):
    """Cycle type of a permutation given as a tuple of images."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        q = start
        while not seen[q]:
            seen[q] = True
            q = perm[q]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def sylow_elements(n, p, budget=None):
    """Stream every element of the Sylow p-subgroup of S_n exactly once.

    Yields (cycle type in S_n, per-factor signature tuple).  Factors act on
    consecutive blocks of points ordered by ascending tower height, so the
    cycle type is just the multiset union across factors.  `budget` caps the
    group order (default 2^20, overridable via SYLOW_BRANCH_BUDGET).
    """
    import os

    if budget is None:
        budget = int(os.environ.get("SYLOW_BRANCH_BUDGET", 2**20))
    order = sylow_order(n, p)
    if order > budget:
        raise BudgetExceeded(
            f"|P_{n}| = {order} exceeds the element budget {budget}"
        )
    heights = sylow_shape(n, p)
    factors = []
    for h in heights:
        els = tower_elements(p, h)
        factors.append(
            [(perm_cycle_type(element_perm(p, el)), element_signature(p, el)) for el in els]
        )
    for combo in product(*factors):
        ct = tuple(
            sorted((part for fct, _ in combo for part in fct), reverse=True)
        )
        yield ct, tuple(sig for _, sig in combo)
