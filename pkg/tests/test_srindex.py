import math
import random

from conftest import naive_occurrences, random_text, sample_patterns
from srindex.rindex import build_rindex
from srindex.srindex import (QueryCounters, build_srindex, subsample,
                             subsample_rindex)
from srindex.textcore import build_bundle, ingest

T1 = b"abaaba"


def make(data):
    t = ingest(data)
    b = build_bundle(t)
    return t, b, build_rindex(b)


class TestSubsample:
    def test_worked_example(self):
        kept, removed = subsample([0, 1, 2, 3, 6], 4)
        assert kept == [0, 3, 6]
        assert removed == {1, 2}

    def test_endpoints_always_kept(self):
        rng = random.Random(30)
        for _ in range(100):
            vals = sorted(rng.sample(range(500), rng.randrange(1, 40)))
            for s in (1, 2, 4, 8, 64):
                kept, removed = subsample(vals, s)
                assert kept[0] == vals[0] and kept[-1] == vals[-1]
                assert set(kept) | removed == set(vals)
                assert not set(kept) & removed

    def test_s1_removes_nothing(self):
        vals = list(range(0, 40, 2))
        assert subsample(vals, 1) == (vals, set())

    def test_kept_bound(self):
        # |kept| <= min(r, 2*ceil(n/(s+1)))
        rng = random.Random(31)
        for _ in range(60):
            n = rng.randrange(4, 400)
            vals = sorted(rng.sample(range(n), rng.randrange(2, n)))
            for s in (1, 2, 4, 8, 16):
                kept, _ = subsample(vals, s)
                assert len(kept) <= min(len(vals), 2 * math.ceil(n / (s + 1)))

    def test_spacing_around_removed(self):
        rng = random.Random(32)
        for _ in range(60):
            vals = sorted(rng.sample(range(600), rng.randrange(3, 60)))
            for s in (2, 3, 8):
                kept, removed = subsample(vals, s)
                for v in removed:
                    assert any(abs(v - u) <= s for u in kept), (vals, s, v)

    def test_kept_count_nonincreasing_in_s(self):
        rng = random.Random(33)
        for _ in range(40):
            vals = sorted(rng.sample(range(500), rng.randrange(2, 50)))
            counts = [len(subsample(vals, s)[0]) for s in (1, 2, 4, 8, 16, 64)]
            assert counts == sorted(counts, reverse=True)


class TestDegenerationS1:
    def test_payload_content_identical(self):
        rng = random.Random(34)
        for _ in range(20):
            data = random_text(rng, rng.randrange(2, 200), 2)
            _, _, ri = make(data)
            si = subsample_rindex(ri, 1, 0)
            assert si.removed.ones == 0
            assert si.samples_sub == ri.samples
            assert si.marks.positions == ri.first.positions
            r = ri.rl.r
            want_map = [p - 1 if p >= 2 else r for p in ri.first_to_run]
            assert si.mark_map == want_map
            assert si.sa_last == ri.sa_last

    def test_traces_identical(self):
        rng = random.Random(35)
        for _ in range(20):
            data = random_text(rng, rng.randrange(4, 200), 2)
            t, _, ri = make(data)
            si = subsample_rindex(ri, 1, 0)
            for pat in sample_patterns(rng, data, 12):
                syms = t.map_pattern(pat)
                if syms is None:
                    continue
                c = QueryCounters()
                got = si.locate(syms, counters=c)
                assert got == ri.locate(syms)  # same emission order
                assert si.count_toehold(syms) == ri.count_toehold(syms)
                assert c.max_walk == 0 and c.walk_steps == 0


class TestQueries:
    def test_locate_vs_oracle_all_variants(self):
        rng = random.Random(36)
        for _ in range(25):
            data = random_text(rng, rng.randrange(2, 220), rng.choice([2, 4]))
            t, _, ri = make(data)
            subs = [(s, v, subsample_rindex(ri, s, v))
                    for s in (1, 2, 3, 4, 8, 64) for v in (0, 1, 2)]
            for pat in sample_patterns(rng, data, 20):
                syms = t.map_pattern(pat)
                want = naive_occurrences(data, pat)
                for s, v, si in subs:
                    counters = QueryCounters()
                    got = [] if syms is None else \
                        sorted(si.locate(syms, counters=counters))
                    assert got == want, (data, pat, s, v)
                    assert counters.max_walk < s, (data, pat, s, v)
                    assert si.count(syms or [0]) == len(want)

    def test_variants_agree_exactly(self):
        rng = random.Random(37)
        for _ in range(15):
            data = random_text(rng, rng.randrange(4, 200), 2)
            t, _, ri = make(data)
            for s in (2, 4, 8):
                ixs = [subsample_rindex(ri, s, v) for v in (0, 1, 2)]
                for pat in sample_patterns(rng, data, 10):
                    syms = t.map_pattern(pat)
                    if syms is None:
                        continue
                    results = [sorted(ix.locate(syms)) for ix in ixs]
                    assert results[0] == results[1] == results[2]

    def test_toehold_walk_bounded(self):
        rng = random.Random(38)
        for _ in range(15):
            data = random_text(rng, rng.randrange(4, 200), 2)
            t, b, ri = make(data)
            for s in (2, 4, 8):
                si = subsample_rindex(ri, s, 0)
                for pat in sample_patterns(rng, data, 10):
                    syms = t.map_pattern(pat)
                    if syms is None:
                        continue
                    c = QueryCounters()
                    th = si.count_toehold(syms, counters=c)
                    assert c.max_walk < s
                    if th is not None:
                        sp, ep, last = th
                        assert last == b.sa[ep - 1], (data, pat, s)


class TestBuild:
    def test_build_from_bundle(self):
        t = ingest(T1)
        b = build_bundle(t)
        si = build_srindex(b, 2, 1)
        assert si.s == 2 and si.variant == 1
        assert sorted(si.locate(t.map_pattern(b"ab"))) == [1, 4]

    def test_extreme_s_keeps_two(self):
        rng = random.Random(39)
        data = random_text(rng, 150, 2)
        _, _, ri = make(data)
        si = subsample_rindex(ri, 10_000, 0)
        assert len(si.samples_sub) == 2
        t = ingest(data)
        pat = data[3:7]
        assert sorted(si.locate(t.map_pattern(pat))) == \
            naive_occurrences(data, pat)
