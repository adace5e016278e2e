import random

import pytest

from conftest import naive_occurrences, naive_suffix_array, random_text
from srindex.textcore import build_bundle, flatten_fasta, ingest, oracle_search

T1 = b"abaaba"


class TestIngest:
    def test_remap(self):
        t = ingest(T1)
        assert t.n == 7
        assert t.alphabet == [0, ord("a"), ord("b")]
        assert t.symbols == [2, 3, 2, 2, 3, 2, 1]

    def test_trailing_terminator_accepted(self):
        assert ingest(T1 + b"\x00").symbols == ingest(T1).symbols

    def test_rejects_empty(self):
        for bad in (b"", b"\x00"):
            with pytest.raises(ValueError):
                ingest(bad)

    def test_rejects_interior_terminator(self):
        with pytest.raises(ValueError):
            ingest(b"ab\x00ba")

    def test_fasta(self):
        data = b">seq1 desc\nACGT\nAC\n>seq2\nGG\n"
        assert flatten_fasta(data) == b"ACGTACGG"
        t = ingest(data, fasta=True)
        assert t.n == 9

    def test_pattern_mapping(self):
        t = ingest(T1)
        assert t.map_pattern(b"ab") == [2, 3]
        assert t.map_pattern(b"az") is None
        assert t.map_pattern(b"\x00") is None


class TestBundle:
    def test_canonical_values(self):
        b = build_bundle(ingest(T1))
        assert b.sa == [7, 6, 3, 4, 1, 5, 2]
        assert b.isa == [5, 7, 3, 4, 6, 2, 1]
        # bwt letters: a b b a $ a a
        assert b.bwt == [2, 3, 3, 2, 1, 2, 2]
        assert b.psi == [5, 1, 4, 6, 7, 2, 3]

    def test_against_naive_sa(self, rng):
        for _ in range(60):
            t = ingest(random_text(rng, rng.randrange(1, 200),
                                   rng.choice([1, 2, 4, 26])))
            b = build_bundle(t)
            assert b.sa == naive_suffix_array(t.symbols)

    def test_permutation_identities(self, rng):
        for _ in range(40):
            t = ingest(random_text(rng, rng.randrange(1, 300), 3))
            b = build_bundle(t)
            n = t.n
            assert sorted(b.sa) == list(range(1, n + 1))
            for i in range(1, n + 1):
                assert b.isa[b.sa[i - 1] - 1] == i
                # psi advances one text position
                assert b.sa[b.psi[i - 1] - 1] == b.sa[i - 1] % n + 1
                # bwt holds the preceding symbol, cyclically
                prev = (b.sa[i - 1] - 2) % n
                assert b.bwt[i - 1] == t.symbols[prev]

    def test_single_symbol_text(self):
        b = build_bundle(ingest(b"aaaa"))
        assert b.sa == [5, 4, 3, 2, 1]


class TestOracleSearch:
    def test_matches_naive(self, rng):
        for _ in range(40):
            data = random_text(rng, rng.randrange(2, 150), 2)
            t = ingest(data)
            for _ in range(15):
                m = rng.randrange(1, 6)
                i = rng.randrange(max(1, len(data) - m))
                pat = data[i:i + m] if rng.random() < 0.7 else \
                    bytes(rng.choice(b"abc") for _ in range(m))
                occ, pos = oracle_search(t, pat)
                assert pos == naive_occurrences(data, pat)
                assert occ == len(pos)

    def test_out_of_alphabet(self):
        t = ingest(T1)
        assert oracle_search(t, b"zz") == (0, [])
        assert oracle_search(t, b"") == (0, [])
        assert oracle_search(t, b"a") == (4, [1, 3, 4, 6])

    def test_terminator_excluded(self):
        t = ingest(b"aba")
        occ, pos = oracle_search(t, b"a")
        assert (occ, pos) == (2, [1, 3])
