"""Psi-run compressed suffix array.

Psi restricted to the suffix block of one symbol is increasing, so its
runs of consecutive values (confined runs) never cross symbol boundaries
and their count equals the number of BWT runs. Per symbol, run head and
tail values are delta-coded; global run start positions, the SA values at
run heads, and the C table complete the counting side.

Locating mirrors the BWT side: the SA value at each run tail is a mark
(text position), paired with the head sample of the next run (cyclically),
and iphi maps SA[i] to SA[i+1] via the successor mark.
"""

from bisect import bisect_left, bisect_right

from .succinct import BlockedDeltaSeq, SparseBitvector

DEFAULT_BLOCK = 64


class PsiRuns:
    """Counting structures: per-symbol head/tail streams plus run geometry."""

    def __init__(self, n, sigma, C, i_psi, run_symbols, heads, tails,
                 block=DEFAULT_BLOCK):
        self.n = n
        self.sigma = sigma
        self.C = C                    # C[c] symbols smaller than c
        self.i_psi = i_psi            # global run -> first position
        self.r = len(i_psi)
        self.block = block
        # first_run[c] = 1-based global index of c's first run (r+1 if none)
        self.first_run = [1] * (sigma + 2)
        for q, c in enumerate(run_symbols, 1):
            self.first_run[c + 1] = q + 1
        for c in range(1, sigma + 2):
            if self.first_run[c] < self.first_run[c - 1]:
                self.first_run[c] = self.first_run[c - 1]
        self.heads = heads            # dict c -> BlockedDeltaSeq
        self.tails = tails

    @classmethod
    def from_values(cls, n, sigma, C, i_psi, run_symbols, head_vals,
                    tail_vals, block=DEFAULT_BLOCK):
        heads = {}
        tails = {}
        q = 0
        for c in range(1, sigma + 1):
            hv, tv = [], []
            while q < len(run_symbols) and run_symbols[q] == c:
                hv.append(head_vals[q])
                tv.append(tail_vals[q])
                q += 1
            heads[c] = BlockedDeltaSeq(hv, block)
            tails[c] = BlockedDeltaSeq(tv, block)
        return cls(n, sigma, C, i_psi, run_symbols, heads, tails, block)

    def run_count(self, c):
        return self.first_run[c + 1] - self.first_run[c]

    def run_of(self, i):
        """Global index of the run containing position i."""
        return bisect_right(self.i_psi, i)

    def symbol_of_run(self, q):
        return bisect_right(self.first_run, q) - 1

    def head_value(self, q):
        c = self.symbol_of_run(q)
        return self.heads[c].access(q - self.first_run[c] + 1)

    def tail_value(self, q):
        c = self.symbol_of_run(q)
        return self.tails[c].access(q - self.first_run[c] + 1)

    def run_end(self, q):
        return self.i_psi[q] - 1 if q < self.r else self.n

    def psi(self, i):
        q = self.run_of(i)
        return self.head_value(q) + (i - self.i_psi[q - 1])

    def backward_step(self, rng, c):
        """Positions in the c-block whose Psi value lies in rng, or None."""
        sp, ep = rng
        rc = self.run_count(c)
        if rc == 0:
            return None
        heads, tails = self.heads[c], self.tails[c]
        base = self.first_run[c] - 1
        # leftmost candidate run: first whose tail reaches sp
        p = tails.pred(sp - 1)
        k0 = (p[1] if p else 0) + 1
        if k0 > rc:
            return None
        h0 = heads.access(k0)
        if h0 > ep:
            return None
        sp2 = self.i_psi[base + k0 - 1] + max(0, sp - h0)
        # rightmost candidate run: last whose head is <= ep
        p = heads.pred(ep)
        k1 = p[1]
        t1 = tails.access(k1)
        ep2 = self.i_psi[base + k1 - 1] + (min(ep, t1) - p[0])
        if sp2 > ep2:
            return None
        return sp2, ep2

    def count_range(self, syms):
        rng = (1, self.n)
        for c in reversed(syms):
            if not 1 <= c <= self.sigma:
                return None
            rng = self.backward_step(rng, c)
            if rng is None:
                return None
        return rng

    def count(self, syms):
        rng = self.count_range(syms)
        return 0 if rng is None else rng[1] - rng[0] + 1


class RCsa:
    def __init__(self, runs, f_sa, marks_l, mark_map):
        self.runs = runs
        self.n = runs.n
        self.f_sa = f_sa              # run q -> SA at its first position
        self.marks_l = marks_l        # SparseBitvector over text positions
        self.mark_map = mark_map      # k-th mark -> slot in f_sa
        self.sa_first = f_sa[0]       # SA[1] = n

    def psi(self, i):
        return self.runs.psi(i)

    def count(self, syms):
        return self.runs.count(syms)

    def iphi(self, i):
        """SA value following the one at text position i; i in [1..n]."""
        k = self.marks_l.rank1(i - 1) + 1
        if k <= self.marks_l.ones:
            succ = self.marks_l.positions[k - 1]
        else:
            # cyclic wrap; unreachable in the full index (n is a mark)
            k = 1
            succ = self.marks_l.positions[0] + self.n
        slot = self.mark_map[k - 1]
        return self.f_sa[slot - 1] - (succ - i)

    def count_toehold(self, syms):
        """Backward search keeping SA[sp]; returns (sp, ep, SA[sp]) or None."""
        runs = self.runs
        sp, ep = 1, runs.n
        first = self.sa_first
        for c in reversed(syms):
            if not 1 <= c <= runs.sigma:
                return None
            rc = runs.run_count(c)
            if rc == 0:
                return None
            heads = runs.heads[c]
            p = heads.pred(sp)
            inside = False
            if p is not None:
                k = p[1]
                if sp <= runs.tails[c].access(k):
                    inside = True
                knext = k + 1
            else:
                knext = 1
            rng = runs.backward_step((sp, ep), c)
            if rng is None:
                return None
            sp, ep = rng
            if inside:
                first -= 1
            else:
                first = self.f_sa[runs.first_run[c] + knext - 2]
        return sp, ep, first

    def locate(self, syms, sort=False):
        th = self.count_toehold(syms)
        if th is None:
            return []
        sp, ep, first = th
        out = [first]
        v = first
        for _ in range(ep - sp):
            v = self.iphi(v)
            out.append(v)
        if sort:
            out.sort()
        return out


def build_psi_runs(bundle, block=DEFAULT_BLOCK):
    n = bundle.n
    sigma = bundle.text.sigma
    psi = bundle.psi
    counts = [0] * (sigma + 1)
    for c in bundle.text.symbols:
        counts[c] += 1
    C = [0] * (sigma + 2)
    for c in range(1, sigma + 1):
        C[c + 1] = C[c] + counts[c]
    boundaries = set(C[c] + 1 for c in range(2, sigma + 1))
    i_psi = [1]
    head_vals = [psi[0]]
    tail_vals = []
    for i in range(2, n + 1):
        if i in boundaries or psi[i - 1] != psi[i - 2] + 1:
            tail_vals.append(psi[i - 2])
            i_psi.append(i)
            head_vals.append(psi[i - 1])
    tail_vals.append(psi[n - 1])
    run_symbols = [bisect_left(C, pos) - 1 for pos in i_psi]
    return PsiRuns.from_values(n, sigma, C, i_psi, run_symbols, head_vals,
                               tail_vals, block)


def build_rcsa(bundle, block=DEFAULT_BLOCK, runs=None):
    if runs is None:
        runs = build_psi_runs(bundle, block)
    sa = bundle.sa
    r = runs.r
    f_sa = [sa[runs.i_psi[q] - 1] for q in range(r)]
    # tail of run q is marked with SA at that position, paired with the
    # head sample of run q+1 (wrapping to run 1)
    marks = []
    for q in range(1, r + 1):
        mval = sa[runs.run_end(q) - 1]
        slot = q + 1 if q < r else 1
        marks.append((mval, slot))
    marks.sort()
    marks_l = SparseBitvector([m for m, _ in marks], runs.n)
    mark_map = [slot for _, slot in marks]
    return RCsa(runs, f_sa, marks_l, mark_map)
