"""Restriction of irreducible symmetric-group characters to Sylow p-subgroups.

The computation follows the subgroup chain

    S_{p^k}  >  W = S_{p^{k-1}} wr C_p  >  P = P_{p^{k-1}} wr C_p

one tower level at a time.  Stage A decomposes over W: a non-constant
C_p-orbit of p-tuples (mu_1..mu_p) of partitions of p^{k-1} contributes its
induced character with multiplicity c^la_{mu_1..mu_p}, and a constant tuple
mu^p splits over the p twists, the t-th receiving

    (1/p) * [ c^la_{mu..mu} + e_t * D ],   e_t = p-1 if t = 0 else -1,

with D the stretched pairing <s_mu[p_p], s_la>.  (For p = 2 this is the
classical symmetric/alternating square split; for odd p it is the same
Frobenius computation carried out over C_p, where only the Galois-invariant
aggregate e_t enters, so no choice of primitive root is made.  The odd-p
stage is a derived extension validated against the brute-force oracle.)

Stage B restricts each W-constituent to P via the recursively known vectors
R_mu of the factors: twisted constituents split their constant-label blocks
through the symmetric-power counts N_s(m) = (m^p + (p-1)m)/p or (m^p - m)/p,
and induced constituents restrict by Mackey's theorem with a single double
coset, scattering products of factor multiplicities over orbit labels.

Every divisibility is asserted and every full vector is checked against
dimension conservation; failures abort rather than round.

A linear-degree slice of the same recursion (linear_tower) tracks digit
strings only, which is what the classification sweeps and large-k spot
checks run on.
"""

from collections import defaultdict
from functools import cache
from itertools import product

from . import characters as ch
from . import tower as tw
from .partitions import check_partition, sylow_shape

_full_memo = {}
_lin_memo = {}
_stage_a_memo = {}


def _rotations(tup):
    return [tup[i:] + tup[:i] for i in range(len(tup))]


def _twist_weights(p, c, d):
    """Stage A multiplicities of the p twists of a constant tuple."""
    weights = []
    for t in range(p):
        e = p - 1 if t == 0 else -1
        q, r = divmod(c + e * d, p)
        if r or q < 0:
            raise ArithmeticError(
                f"twist weight not a nonneg integer: c={c}, D={d}, p={p}, t={t}"
            )
        weights.append(q)
    return weights


@cache
def _sym_power_counts(p, m):
    """N_s(m) for s = 0..p-1: how an m-fold constant block splits over twists."""
    n0, r0 = divmod(m**p + (p - 1) * m, p)
    ns, rs = divmod(m**p - m, p)
    if r0 or rs or n0 < 0 or ns < 0:
        raise ArithmeticError(f"bad symmetric-power counts at p={p}, m={m}")
    return (n0,) + (ns,) * (p - 1)


def _stage_a(la, p, k):
    """Decomposition over W: (non-constant orbit classes, constant data).

    Returns (classes, consts) where classes maps a canonical p-tuple of
    partitions to its multiplicity and consts maps mu to (c, twist weights).
    """
    key = (p, k, la)
    hit = _stage_a_memo.get(key)
    if hit is not None:
        return hit
    m = p ** (k - 1)
    classes = {}
    consts = {}
    for mus, c in ch.young_decompose(la, (m,) * p).items():
        if len(set(mus)) == 1:
            mu = mus[0]
            d = ch.stretch_coefficient(la, mu, p)
            consts[mu] = (c, _twist_weights(p, c, d))
        else:
            canonical = min(_rotations(mus))
            if canonical not in classes:
                classes[canonical] = c
    result = (classes, consts)
    _stage_a_memo[key] = result
    return result


def restrict_tower(la, p, k):
    """Full decomposition of la (a partition of p^k) over the tower labels.

    Returns a read-only dict label -> multiplicity, memoized on (p, k, la).
    """
    la = check_partition(la)
    if sum(la) != p**k:
        raise ValueError(f"|{la}| != {p}^{k}")
    key = (p, k, la)
    hit = _full_memo.get(key)
    if hit is not None:
        return hit
    if k == 0:
        vec = {tw.LEAF: 1}
    else:
        acc = defaultdict(int)
        classes, consts = _stage_a(la, p, k)
        for mus, c in classes.items():
            parts = [list(restrict_tower(mu, p, k - 1).items()) for mu in mus]
            for combo in product(*parts):
                coeff = c
                for _, m in combo:
                    coeff *= m
                labels = tuple(lab for lab, _ in combo)
                if len(set(labels)) == 1:
                    for t in range(p):
                        acc[tw.twist(labels[0], t)] += coeff
                else:
                    acc[tw.orbit(labels)] += coeff
        for mu, (c, weights) in consts.items():
            sub = restrict_tower(mu, p, k - 1)
            for lab, m in sub.items():
                counts = _sym_power_counts(p, m)
                for t, w in enumerate(weights):
                    if not w:
                        continue
                    for s in range(p):
                        if counts[s]:
                            acc[tw.twist(lab, (t + s) % p)] += w * counts[s]
            if c:
                items = list(sub.items())
                for combo in product(items, repeat=p):
                    labels = tuple(lab for lab, _ in combo)
                    if len(set(labels)) == 1:
                        continue
                    if tw.orbit(labels)[1:] != labels:
                        continue
                    coeff = c
                    for _, m in combo:
                        coeff *= m
                    acc[tw.orbit(labels)] += coeff
        vec = dict(acc)
    total = sum(m * tw.label_degree(p, lab) for lab, m in vec.items())
    if total != ch.sn_degree(la):
        raise ArithmeticError(
            f"dimension conservation failed for {la} at (p,k)=({p},{k}): "
            f"{total} != {ch.sn_degree(la)}"
        )
    _full_memo[key] = vec
    return vec


def linear_tower(la, p, k):
    """Linear-degree slice of restrict_tower, keyed by digit strings.

    Exact projection of the same recursion: only the degree-1 labels of the
    factors can assemble into a degree-1 label one level up, through either
    a constant tuple (twists) or a constant block of a twisted constituent.
    """
    la = check_partition(la)
    if sum(la) != p**k:
        raise ValueError(f"|{la}| != {p}^{k}")
    key = (p, k, la)
    hit = _lin_memo.get(key)
    if hit is not None:
        return hit
    if k == 0:
        vec = {(): 1}
    else:
        acc = defaultdict(int)
        classes, consts = _stage_a(la, p, k)
        for mus, c in classes.items():
            parts = [linear_tower(mu, p, k - 1) for mu in mus]
            for digits, m in parts[0].items():
                coeff = c * m
                for other in parts[1:]:
                    coeff *= other.get(digits, 0)
                if coeff:
                    for t in range(p):
                        acc[digits + (t,)] += coeff
        for mu, (c, weights) in consts.items():
            for digits, m in linear_tower(mu, p, k - 1).items():
                counts = _sym_power_counts(p, m)
                for t, w in enumerate(weights):
                    if not w:
                        continue
                    for s in range(p):
                        if counts[s]:
                            acc[digits + ((t + s) % p,)] += w * counts[s]
        vec = dict(acc)
    _lin_memo[key] = vec
    return vec


def restrict_sylow(la, p):
    """Decomposition of la over the full Sylow p-subgroup of S_|la|.

    Labels are tuples of per-factor tower labels, factors in ascending
    tower-height order.
    """
    la = check_partition(la)
    heights = sylow_shape(sum(la), p)
    out = defaultdict(int)
    for mus, c in ch.young_decompose(la, tuple(p**h for h in heights)).items():
        parts = [
            list(restrict_tower(mu, p, h).items()) for mu, h in zip(mus, heights)
        ]
        for combo in product(*parts):
            coeff = c
            for _, m in combo:
                coeff *= m
            out[tuple(lab for lab, _ in combo)] += coeff
    return dict(out)


def linear_sylow(la, p):
    """Linear constituents over the full Sylow subgroup: digit tuples -> mult."""
    la = check_partition(la)
    heights = sylow_shape(sum(la), p)
    out = defaultdict(int)
    for mus, c in ch.young_decompose(la, tuple(p**h for h in heights)).items():
        parts = [linear_tower(mu, p, h) for mu, h in zip(mus, heights)]
        for combo in product(*[list(part.items()) for part in parts]):
            coeff = c
            for _, m in combo:
                coeff *= m
            out[tuple(digits for digits, _ in combo)] += coeff
    return dict(out)


def _normalize_linear(psi, nfactors):
    """Accept a bare digit tuple for single-factor groups; always return a tuple of tuples."""
    psi = tuple(psi)
    if nfactors == 1 and (not psi or isinstance(psi[0], int)):
        return (psi,)
    return tuple(tuple(f) for f in psi)


def sbc(la, p, psi):
    """Sylow branching coefficient: multiplicity of the linear label psi.

    psi is a digit tuple (single tower factor) or a tuple of per-factor digit
    tuples in ascending factor order.
    """
    la = check_partition(la)
    heights = sylow_shape(sum(la), p)
    psi = _normalize_linear(psi, len(heights))
    if len(psi) != len(heights) or any(
        len(f) != h for f, h in zip(psi, heights)
    ):
        raise ValueError(f"label {psi} does not match the factor shape {heights}")
    return linear_sylow(la, p).get(psi, 0)


def lin_constituents(la, p):
    """Map digit-tuple labels -> multiplicity; every entry is positive."""
    return linear_sylow(la, p)


def count_lin(la, p):
    """Number of distinct linear constituents of la restricted to P_n."""
    return len(linear_sylow(la, p))


def omega_membership(la, p, psi):
    """Whether psi appears in the restriction of la at all."""
    return sbc(la, p, psi) > 0


CACHE_FORMAT = "sylowbranch-restriction-cache"
CACHE_VERSION = 1


def save_cache(path):
    """Persist the full-vector memo as versioned JSON."""
    import json

    entries = []
    for (p, k, la), vec in sorted(_full_memo.items()):
        entries.append(
            {
                "p": p,
                "k": k,
                "lambda": ",".join(map(str, la)),
                "vector": [
                    [tw.label_text(lab), m]
                    for lab, m in sorted(
                        vec.items(),
                        key=lambda kv: (tw.label_degree(p, kv[0]), tw.label_text(kv[0])),
                    )
                ],
            }
        )
    payload = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "primes": sorted({p for p, _, _ in _full_memo}),
        "max_k": max((k for _, k, _ in _full_memo), default=0),
        "entries": entries,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def load_cache(path, missing_ok=False):
    """Prime the full-vector memo from a cache file; stale versions are rejected."""
    import json
    import os

    if missing_ok and not os.path.exists(path):
        return 0
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != CACHE_FORMAT:
        raise ValueError(f"not a restriction cache: {path}")
    if payload.get("version") != CACHE_VERSION:
        raise ValueError(
            f"stale cache version {payload.get('version')!r} (need {CACHE_VERSION})"
        )
    loaded = 0
    for entry in payload["entries"]:
        p, k = int(entry["p"]), int(entry["k"])
        la = tuple(int(x) for x in entry["lambda"].split(",")) if entry["lambda"] else ()
        vec = {tw.parse_label(text): int(m) for text, m in entry["vector"]}
        total = sum(m * tw.label_degree(p, lab) for lab, m in vec.items())
        if total != ch.sn_degree(la):
            raise ValueError(f"corrupt cache entry for {la} in {path}")
        _full_memo[(p, k, la)] = vec
        loaded += 1
    return loaded
