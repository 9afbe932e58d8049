import json
import random

import pytest

from sylowbranch import engine
from sylowbranch import tower as tw
from sylowbranch.characters import plethysm_split, sn_degree, split_pairs
from sylowbranch.partitions import conjugate, hook, partitions, sylow_shape


def test_restrict_tower_trivial_levels():
    assert engine.restrict_tower((1,), 2, 0) == {tw.LEAF: 1}
    assert engine.restrict_tower((2,), 2, 1) == {tw.linear_label((0,)): 1}
    assert engine.restrict_tower((1, 1), 2, 1) == {tw.linear_label((1,)): 1}


def test_restrict_tower_square_of_two():
    want = {tw.linear_label((0, 0)): 1, tw.linear_label((1, 0)): 1}
    assert engine.restrict_tower((2, 2), 2, 2) == want


def test_restrict_tower_row_is_trivial_label():
    for p, k in ((2, 3), (3, 2)):
        n = p**k
        assert engine.restrict_tower((n,), p, k) == {tw.linear_label((0,) * k): 1}


def test_restrict_tower_dimension_conservation():
    for p, k in ((2, 3), (3, 2)):
        for la in partitions(p**k):
            vec = engine.restrict_tower(la, p, k)
            total = sum(m * tw.label_degree(p, lab) for lab, m in vec.items())
            assert total == sn_degree(la)
            assert all(m > 0 for m in vec.values())


def test_linear_tower_is_the_linear_slice():
    for p, k in ((2, 3), (3, 2)):
        for la in partitions(p**k):
            full = engine.restrict_tower(la, p, k)
            slc = {
                tw.linear_digits(lab): m
                for lab, m in full.items()
                if tw.linear_digits(lab) is not None
            }
            assert slc == engine.linear_tower(la, p, k)


def test_every_shape_has_a_linear_constituent():
    for n in range(1, 13):
        for la in partitions(n):
            assert engine.lin_constituents(la, 2)
    for n in range(3, 10):
        for la in partitions(n):
            assert engine.lin_constituents(la, 3)


def test_sbc_example_values():
    assert engine.sbc((6, 2), 2, (0, 0, 0)) == 2
    assert engine.sbc((2, 2), 2, (0, 0)) == 1
    assert engine.sbc((2, 2), 2, (0, 1)) == 0
    assert engine.sbc((8, 2, 1, 1, 1, 1, 1, 1), 2, tw.hook_to_linear(4, 6)) == 1


def test_sbc_accepts_factor_tuples():
    # single-factor shorthand and the explicit per-factor form agree
    assert engine.sbc((6, 2), 2, ((0, 0, 0),)) == 2
    assert engine.sbc((6, 6), 2, ((0, 0), (0, 0, 0))) == 4


def test_sbc_size_validation():
    with pytest.raises(ValueError):
        engine.sbc((3, 1), 2, (0, 0, 0))


def test_lin_constituents_remark_values():
    got = engine.lin_constituents((5, 3), 2)
    assert got == {(tw.hook_to_linear(3, 1),): 1, (tw.hook_to_linear(3, 2),): 1}


def test_lin_constituents_composite_oracle_confirmed():
    # frozen from a full element-sum at n=12 (1024 elements)
    got = engine.lin_constituents((6, 6), 2)
    assert len(got) == 9
    assert sum(got.values()) == 14
    assert got[((0, 0), (0, 0, 0))] == 4


def test_stage_a_matches_plethysm_split_at_two():
    # constant-block weights at p=2 are exactly the symmetric/alternating split
    for la in partitions(8):
        _, consts = engine._stage_a(la, 2, 3)
        for mu, (c, weights) in consts.items():
            a2, a11 = plethysm_split(la, mu)
            assert tuple(weights) == (a2, a11)
            assert c == a2 + a11


def test_count_lin_matches_lin_constituents():
    for la in partitions(9):
        assert engine.count_lin(la, 2) == len(engine.lin_constituents(la, 2))


def test_omega_membership():
    assert engine.omega_membership((5, 3), 2, (tw.hook_to_linear(3, 1),))
    assert not engine.omega_membership((5, 3), 2, (tw.hook_to_linear(3, 3),))


def test_containment_monotonicity_spot_checks():
    # adding digit-dominated boxes never loses linear constituents
    def admissible(m, n, p=2):
        while m or n:
            if m % p > n % p:
                return False
            m //= p
            n //= p
        return True

    rng = random.Random(41)
    checked = 0
    for n in range(9, 16):
        for m in {8, n - 8}:
            if not (0 < m < n and admissible(m, n)):
                continue
            for _ in range(4):
                la = rng.choice(partitions(n))
                subs = [
                    nu
                    for nu in partitions(m)
                    if len(nu) <= len(la) and all(nu[i] <= la[i] for i in range(len(nu)))
                ]
                if not subs:
                    continue
                nu = rng.choice(subs)
                assert engine.count_lin(la, 2) >= engine.count_lin(nu, 2), (la, nu)
                checked += 1
    assert checked >= 30


def test_meeting_set_lower_bound_at_sixteen():
    # shared linear constituents of any split pair survive into the product
    for la in partitions(16):
        shared = set()
        for (mu, nu), c in split_pairs(la, 8).items():
            if c:
                shared |= set(engine.lin_constituents(mu, 2)) & set(
                    engine.lin_constituents(nu, 2)
                )
        assert engine.count_lin(la, 2) >= len(shared), la


def test_conjugation_twist_symmetry():
    for n in (8, 12):
        heights = sylow_shape(n, 2)
        for la in partitions(n):
            lc = engine.lin_constituents(la, 2)
            twisted = {
                tuple(tw.sgn_twist(h, d) if h else d for d, h in zip(f, heights)): m
                for f, m in lc.items()
            }
            assert twisted == engine.lin_constituents(conjugate(la), 2)


def test_cache_roundtrip(tmp_path):
    engine.restrict_tower((3, 3, 2), 2, 3)
    engine.restrict_tower((2, 2), 2, 2)
    path = tmp_path / "cache.json"
    engine.save_cache(path)
    payload = json.loads(path.read_text())
    assert payload["format"] == engine.CACHE_FORMAT
    assert payload["version"] == engine.CACHE_VERSION
    assert 2 in payload["primes"]
    saved = dict(engine._full_memo)
    engine._full_memo.clear()
    loaded = engine.load_cache(path)
    assert loaded == len(payload["entries"])
    for key, vec in saved.items():
        assert engine._full_memo[key] == vec


def test_cache_rejects_stale_version(tmp_path):
    engine.restrict_tower((2, 2), 2, 2)
    path = tmp_path / "cache.json"
    engine.save_cache(path)
    doc = json.loads(path.read_text())
    doc["version"] = 99
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError):
        engine.load_cache(path)


def test_cache_rejects_corrupt_entry(tmp_path):
    engine.restrict_tower((2, 2), 2, 2)
    path = tmp_path / "cache.json"
    engine.save_cache(path)
    doc = json.loads(path.read_text())
    doc["entries"][0]["vector"][0][1] += 1
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError):
        engine.load_cache(path)


def test_load_cache_missing_ok(tmp_path):
    assert engine.load_cache(tmp_path / "absent.json", missing_ok=True) == 0
