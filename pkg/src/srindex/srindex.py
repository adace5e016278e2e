"""Subsampled run-sampled locating.

A left-to-right sweep over the sorted sample values drops a sample when it
and its successor both sit within distance s of the last survivor; first
and last are always kept. Marks whose paired sample was dropped disappear
too. Lost SA values are recovered at query time with short LF walks, never
longer than s - 1 steps.

Variants add per-mark validity data so phi can be reused directly when no
removed mark blocks it: variant 1 keeps one bit per surviving mark,
variant 2 also keeps the distance to the nearest removed mark.
"""

from .succinct import DenseBitvector, SparseBitvector


class QueryCounters:
    """Per-query instrumentation (walk lengths, recursion depth)."""

    def __init__(self):
        self.max_walk = 0
        self.walks = 0
        self.walk_steps = 0

    def record(self, steps):
        self.walks += 1
        self.walk_steps += steps
        if steps > self.max_walk:
            self.max_walk = steps


def subsample(sorted_values, s):
    """Sweep the sorted sample values; returns (kept list, removed set)."""
    m = len(sorted_values)
    if m <= 2 or s <= 1:
        return list(sorted_values), set()
    kept = [sorted_values[0]]
    removed = set()
    for i in range(1, m - 1):
        if sorted_values[i + 1] - kept[-1] <= s:
            removed.add(sorted_values[i])
        else:
            kept.append(sorted_values[i])
    kept.append(sorted_values[-1])
    return kept, removed


class SrIndex:
    def __init__(self, rl, s, variant, removed, samples_sub, marks, mark_map,
                 sa_last, valid=None, valid_area=None):
        self.rl = rl
        self.n = rl.n
        self.s = s
        self.variant = variant
        self.removed = removed            # DenseBitvector over runs
        self.samples_sub = samples_sub    # surviving samples, run order
        self.marks = marks                # SparseBitvector, value+1
        self.mark_map = mark_map          # k-th mark -> slot in samples_sub
        self.sa_last = sa_last
        self.valid = valid                # DenseBitvector per mark gap
        self.valid_area = valid_area      # distances for invalid gaps

    # -- phi on the surviving marks --------------------------------------

    def phi(self, i):
        k = self.marks.rank1(i + 1)
        if k:
            pred = self.marks.positions[k - 1] - 1
        else:
            k = self.marks.ones
            pred = self.marks.positions[k - 1] - 1 - self.n
        slot = self.mark_map[k - 1]
        return self.samples_sub[slot - 1] + 1 + (i - pred)

    def _phi_safe(self, i):
        """True when no removed mark lies between i and its predecessor."""
        k = self.marks.rank1(i + 1)
        if k:
            pred = self.marks.positions[k - 1] - 1
            gap = k
        else:
            gap = self.marks.ones
            pred = self.marks.positions[gap - 1] - 1 - self.n
        if self.valid.get(gap):
            return True
        if self.variant == 1:
            return False
        d = self.valid_area[self.valid.rank0(gap) - 1]
        return i < pred + d

    # -- queries ----------------------------------------------------------

    def count(self, syms):
        return self.rl.count(syms)

    def count_toehold(self, syms, counters=None):
        """Backward search with deferred toehold resolution."""
        rl = self.rl
        sp, ep = 1, rl.n
        hard = None  # (run of the last mismatching step, chars remaining)
        m = 0
        for idx, c in enumerate(reversed(syms)):
            if not 1 <= c <= rl.sigma:
                return None
            if rl.bwt_access(ep) != c:
                k = rl.letter_seq.rank(c, rl.run_of(ep))
                if k == 0:
                    return None
                hard = (rl.letter_seq.select(c, k), idx)
            rng = rl.backward_step((sp, ep), c)
            if rng is None:
                return None
            sp, ep = rng
            m = idx + 1
        if hard is None:
            last = self.sa_last - m
        else:
            p, idx = hard
            if self.removed.get(p):
                val, steps = self._walk_back(rl.run_end(p))
                if counters is not None:
                    counters.record(steps)
                sa_ep = val - 1
            else:
                sa_ep = self.samples_sub[self.removed.rank0(p) - 1]
            last = sa_ep - (m - 1 - idx)
        return sp, ep, last

    def _walk_back(self, j):
        """LF-walk from a run-end whose sample was removed until a surviving
        run-end sample; returns (SA[j], steps). Bounded by s - 1 steps."""
        rl = self.rl
        k = 0
        while True:
            j = rl.lf_step(j)
            k += 1
            q = rl.run_of(j)
            if rl.is_run_end(j) and not self.removed.get(q):
                slot = self.removed.rank0(q)
                return self.samples_sub[slot - 1] + 1 + k, k

    def locate(self, syms, sort=False, counters=None):
        th = self.count_toehold(syms, counters)
        if th is None:
            return []
        sp, ep, last = th
        out = [last]
        if ep > sp:
            self._resolve(sp, ep - 1, last, 0, out, counters)
        if sort:
            out.sort()
        return out

    def _resolve(self, a, b, next_val, k, out, counters):
        """Report original SA values of bwt positions a..b, right to left.

        Positions here are the k-fold LF images of the original range;
        next_val is the original SA value of the position right of b.
        Returns the original SA value at position a.
        """
        rl = self.rl
        nv = next_val
        j = b
        while j >= a:
            q = rl.run_of(j)
            if rl.is_run_end(j) and not self.removed.get(q):
                v = self.samples_sub[self.removed.rank0(q) - 1] + 1 + k
                if counters is not None:
                    counters.record(k)
                out.append(v)
                nv = v
                j -= 1
                continue
            if self.variant and self._phi_safe(nv - 1):
                v = self.phi(nv - 1)
                if counters is not None:
                    counters.record(k)
                out.append(v)
                nv = v
                j -= 1
                continue
            sm = max(a, rl.start.positions[q - 1])
            if k + 1 == self.s:
                v = nv
                for _ in range(j - sm + 1):
                    v = self.phi(v - 1)
                    if counters is not None:
                        counters.record(k)
                    out.append(v)
                nv = v
            else:
                nv = self._resolve(rl.lf_step(sm), rl.lf_step(j), nv,
                                   k + 1, out, counters)
            j = sm - 1
        return nv


def build_srindex(bundle, s, variant=0, rl=None, rindex=None):
    from .rindex import build_rindex

    if rindex is None:
        rindex = build_rindex(bundle, rl)
    rl = rindex.rl
    return subsample_rindex(rindex, s, variant)


def subsample_rindex(rindex, s, variant=0):
    """Build the subsampled index from a full one."""
    rl = rindex.rl
    r = rl.r
    samples = rindex.samples
    _, removed_vals = subsample(sorted(samples), s)
    removed_bits = [1 if samples[p] in removed_vals else 0 for p in range(r)]
    removed = DenseBitvector(removed_bits)
    samples_sub = [samples[p] for p in range(r) if not removed_bits[p]]

    # run q's first-position mark pairs with the sample of run q-1 (cyclic)
    kept_marks = []
    removed_marks = []
    removed_pfx = [0]
    for b in removed_bits:
        removed_pfx.append(removed_pfx[-1] + b)
    # the k-th mark of the full index belongs to run first_to_run[k] and
    # has value first.positions[k]-1
    for k in range(rindex.first.ones):
        mval = rindex.first.positions[k] - 1
        q = rindex.first_to_run[k]
        prev = q - 1 if q >= 2 else r
        if removed_bits[prev - 1]:
            removed_marks.append(mval)
        else:
            slot = prev - removed_pfx[prev]
            kept_marks.append((mval, slot))
    kept_marks.sort()
    removed_marks.sort()
    marks = SparseBitvector([m + 1 for m, _ in kept_marks], rl.n)
    mark_map = [slot for _, slot in kept_marks]

    valid = valid_area = None
    if variant:
        ms = [m for m, _ in kept_marks]
        x = len(ms)
        bits = []
        areas = []
        from bisect import bisect_right
        for g in range(x):
            lo = ms[g]
            hi = ms[g + 1] if g + 1 < x else ms[0] + rl.n
            # removed marks in (lo, hi), cyclically for the last gap
            i0 = bisect_right(removed_marks, lo)
            if i0 < len(removed_marks) and removed_marks[i0] < hi:
                bits.append(0)
                areas.append(removed_marks[i0] - lo)
            elif g + 1 == x and removed_marks and removed_marks[0] + rl.n < hi:
                bits.append(0)
                areas.append(removed_marks[0] + rl.n - lo)
            else:
                bits.append(1)
        valid = DenseBitvector(bits)
        valid_area = areas if variant == 2 else None
        if variant == 1:
            valid_area = None
    return SrIndex(rl, s, variant, removed, samples_sub, marks, mark_map,
                   rindex.sa_last, valid, valid_area)
