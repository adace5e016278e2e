"""On-disk index format.

Layout: a fixed header (magic, format version, kind, variant, n, sigma, r,
s, B), a section table (name, offset, length), the section payloads, and a
trailing crc32 over everything before it. All integers little-endian.
Rank directories and derived tables are rebuilt on load; the load path
checks the checksum and that declared n/sigma/r match the payload.
"""

import struct
import zlib

from .rcsa import PsiRuns, RCsa
from .rindex import RIndex
from .rlbwt import RunLengthBWT
from .srcsa import SrCsa
from .srindex import SrIndex
from .succinct import BlockedDeltaSeq, DenseBitvector, SparseBitvector

MAGIC = b"SRIX"
FORMAT_VERSION = 1

KINDS = ["rlbwt", "r-index", "sr-index", "r-csa", "sr-csa"]

# sections holding locating (as opposed to counting) structures
LOCATING_SECTIONS = {
    "first", "first_to_run", "samples", "sa_last",
    "marks", "mark_map", "samples_sub", "removed", "valid", "valid_area",
    "f_sa", "marks_l",
}


class FormatError(ValueError):
    pass


def pack_ints(values):
    """Fixed-width bit packing; returns bytes (width, count, payload)."""
    width = max((v.bit_length() for v in values), default=0)
    width = max(width, 1)
    acc = 0
    pos = 0
    for v in values:
        acc |= v << pos
        pos += width
    payload = acc.to_bytes((pos + 7) // 8, "little")
    return struct.pack("<BQ", width, len(values)) + payload


def unpack_ints(blob):
    width, count = struct.unpack_from("<BQ", blob, 0)
    acc = int.from_bytes(blob[9:], "little")
    mask = (1 << width) - 1
    return [(acc >> (i * width)) & mask for i in range(count)]


def _dense_bytes(bv):
    acc = 0
    for i, w in enumerate(bv.words):
        acc |= w << (i * 64)
    payload = acc.to_bytes(len(bv.words) * 8, "little")
    return struct.pack("<Q", bv.n) + payload


def _dense_from(blob):
    (n,) = struct.unpack_from("<Q", blob, 0)
    raw = blob[8:]
    words = [
        int.from_bytes(raw[i:i + 8], "little") for i in range(0, len(raw), 8)
    ]
    return DenseBitvector.from_words(words, n)


def _sparse_bytes(bv):
    head = struct.pack("<QQB", bv.n, bv.ones, bv.low_bits)
    return head + pack_ints(bv.lows) + _dense_bytes(bv.high)


def _sparse_from(blob):
    n, ones, low_bits = struct.unpack_from("<QQB", blob, 0)
    off = 17
    width, count = struct.unpack_from("<BQ", blob, off)
    low_len = 9 + (width * count + 7) // 8
    lows = unpack_ints(blob[off:off + low_len])
    high = _dense_from(blob[off + low_len:])
    if len(lows) != ones:
        raise FormatError("sparse bitvector cardinality mismatch")
    return SparseBitvector.from_ef_parts(n, low_bits, lows, high)


def _delta_bytes(seq):
    head = struct.pack("<QQQ", seq.m, seq.B, seq.nbits)
    stream = seq.stream.to_bytes((seq.nbits + 7) // 8, "little")
    return head + pack_ints(seq.samples) + stream


def _delta_from(blob):
    m, B, nbits = struct.unpack_from("<QQQ", blob, 0)
    off = 24
    width, count = struct.unpack_from("<BQ", blob, off)
    s_len = 9 + (width * count + 7) // 8
    samples = unpack_ints(blob[off:off + s_len])
    stream = int.from_bytes(blob[off + s_len:], "little")
    return BlockedDeltaSeq.from_parts(m, B, samples, stream, nbits)


def _multi_bytes(blobs):
    out = [struct.pack("<I", len(blobs))]
    for b in blobs:
        out.append(struct.pack("<Q", len(b)))
        out.append(b)
    return b"".join(out)


def _multi_from(blob):
    (count,) = struct.unpack_from("<I", blob, 0)
    off = 4
    out = []
    for _ in range(count):
        (ln,) = struct.unpack_from("<Q", blob, off)
        off += 8
        out.append(blob[off:off + ln])
        off += ln
    return out


def _alphabet_section(alphabet):
    return pack_ints(list(alphabet))


# -- per-kind section builders --------------------------------------------


def _rlbwt_sections(rl, alphabet):
    return {
        "alphabet": _alphabet_section(alphabet),
        "start": _sparse_bytes(rl.start),
        "letters": pack_ints(rl.letters),
    }


def _rlbwt_from(sections, n, sigma):
    alphabet = unpack_ints(sections["alphabet"])
    start = _sparse_from(sections["start"])
    letters = unpack_ints(sections["letters"])
    if start.n != n or len(start.positions) != len(letters):
        raise FormatError("run table does not match header")
    if alphabet and max(letters) > sigma:
        raise FormatError("letters exceed declared alphabet")
    rl = RunLengthBWT(n, sigma, start.positions, letters)
    rl.start = start
    return rl, alphabet


def _rindex_sections(ix, alphabet):
    out = _rlbwt_sections(ix.rl, alphabet)
    out["first"] = _sparse_bytes(ix.first)
    out["first_to_run"] = pack_ints(ix.first_to_run)
    out["samples"] = pack_ints(ix.samples)
    return out


def _rindex_from(sections, n, sigma):
    rl, alphabet = _rlbwt_from(sections, n, sigma)
    first = _sparse_from(sections["first"])
    first_to_run = unpack_ints(sections["first_to_run"])
    samples = unpack_ints(sections["samples"])
    if len(samples) != rl.r or len(first_to_run) != rl.r:
        raise FormatError("sample tables do not match run count")
    return RIndex(rl, first, first_to_run, samples), alphabet


def _srindex_sections(ix, alphabet):
    out = _rlbwt_sections(ix.rl, alphabet)
    out["marks"] = _sparse_bytes(ix.marks)
    out["mark_map"] = pack_ints(ix.mark_map)
    out["samples_sub"] = pack_ints(ix.samples_sub)
    out["removed"] = _dense_bytes(ix.removed)
    out["sa_last"] = struct.pack("<Q", ix.sa_last)
    if ix.variant:
        out["valid"] = _dense_bytes(ix.valid)
    if ix.variant == 2:
        out["valid_area"] = pack_ints(ix.valid_area)
    return out


def _srindex_from(sections, n, sigma, s, variant):
    rl, alphabet = _rlbwt_from(sections, n, sigma)
    marks = _sparse_from(sections["marks"])
    mark_map = unpack_ints(sections["mark_map"])
    samples_sub = unpack_ints(sections["samples_sub"])
    removed = _dense_from(sections["removed"])
    (sa_last,) = struct.unpack("<Q", sections["sa_last"])
    if removed.n != rl.r or len(samples_sub) != removed.n - removed.ones:
        raise FormatError("subsample tables do not match run count")
    valid = _dense_from(sections["valid"]) if variant else None
    valid_area = unpack_ints(sections["valid_area"]) if variant == 2 else None
    ix = SrIndex(rl, s, variant, removed, samples_sub, marks, mark_map,
                 sa_last, valid, valid_area)
    return ix, alphabet


def _psiruns_sections(runs, alphabet):
    return {
        "alphabet": _alphabet_section(alphabet),
        "c_table": pack_ints(runs.C),
        "i_psi": pack_ints(runs.i_psi),
        "psi_heads": _multi_bytes(
            [_delta_bytes(runs.heads[c]) for c in range(1, runs.sigma + 1)]),
        "psi_tails": _multi_bytes(
            [_delta_bytes(runs.tails[c]) for c in range(1, runs.sigma + 1)]),
    }


def _psiruns_from(sections, n, sigma, block):
    alphabet = unpack_ints(sections["alphabet"])
    C = unpack_ints(sections["c_table"])
    i_psi = unpack_ints(sections["i_psi"])
    heads = {}
    tails = {}
    for c, blob in enumerate(_multi_from(sections["psi_heads"]), 1):
        heads[c] = _delta_from(blob)
    for c, blob in enumerate(_multi_from(sections["psi_tails"]), 1):
        tails[c] = _delta_from(blob)
    if len(C) != sigma + 2 or C[-1] != n:
        raise FormatError("C table does not match header")
    from bisect import bisect_left
    run_symbols = [bisect_left(C, pos) - 1 for pos in i_psi]
    runs = PsiRuns(n, sigma, C, i_psi, run_symbols, heads, tails, block)
    if sum(len(heads[c]) for c in heads) != runs.r:
        raise FormatError("psi run streams do not match run count")
    return runs, alphabet


def _rcsa_sections(ix, alphabet):
    out = _psiruns_sections(ix.runs, alphabet)
    out["f_sa"] = pack_ints(ix.f_sa)
    out["marks_l"] = _sparse_bytes(ix.marks_l)
    out["mark_map"] = pack_ints(ix.mark_map)
    return out


def _rcsa_from(sections, n, sigma, block):
    runs, alphabet = _psiruns_from(sections, n, sigma, block)
    f_sa = unpack_ints(sections["f_sa"])
    marks_l = _sparse_from(sections["marks_l"])
    mark_map = unpack_ints(sections["mark_map"])
    if len(f_sa) != runs.r:
        raise FormatError("sample tables do not match run count")
    return RCsa(runs, f_sa, marks_l, mark_map), alphabet


def _srcsa_sections(ix, alphabet):
    out = _psiruns_sections(ix.runs, alphabet)
    out["marks_l"] = _sparse_bytes(ix.marks_l)
    out["mark_map"] = pack_ints(ix.mark_map)
    out["samples_sub"] = pack_ints(ix.samples_sub)
    out["removed"] = _dense_bytes(ix.removed)
    if ix.variant:
        out["valid"] = _dense_bytes(ix.valid)
    if ix.variant == 2:
        out["valid_area"] = pack_ints(ix.valid_area)
    return out


def _srcsa_from(sections, n, sigma, s, variant, block):
    runs, alphabet = _psiruns_from(sections, n, sigma, block)
    marks_l = _sparse_from(sections["marks_l"])
    mark_map = unpack_ints(sections["mark_map"])
    samples_sub = unpack_ints(sections["samples_sub"])
    removed = _dense_from(sections["removed"])
    if removed.n != runs.r or len(samples_sub) != removed.n - removed.ones:
        raise FormatError("subsample tables do not match run count")
    valid = _dense_from(sections["valid"]) if variant else None
    valid_area = unpack_ints(sections["valid_area"]) if variant == 2 else None
    ix = SrCsa(runs, s, variant, removed, samples_sub, marks_l, mark_map, n,
               valid, valid_area)
    return ix, alphabet


# -- envelope -------------------------------------------------------------


def _kind_of(ix):
    if isinstance(ix, SrIndex):
        return "sr-index"
    if isinstance(ix, SrCsa):
        return "sr-csa"
    if isinstance(ix, RIndex):
        return "r-index"
    if isinstance(ix, RCsa):
        return "r-csa"
    if isinstance(ix, RunLengthBWT):
        return "rlbwt"
    raise TypeError(f"not an index: {type(ix)!r}")


def _params_of(ix, kind):
    if kind == "rlbwt":
        return ix.n, ix.sigma, ix.r, 0, 0, 0
    if kind == "r-index":
        return ix.n, ix.rl.sigma, ix.rl.r, 0, 0, 0
    if kind == "sr-index":
        return ix.n, ix.rl.sigma, ix.rl.r, ix.s, 0, ix.variant
    if kind == "r-csa":
        return ix.n, ix.runs.sigma, ix.runs.r, 0, ix.runs.block, 0
    return ix.n, ix.runs.sigma, ix.runs.r, ix.s, ix.runs.block, ix.variant


def serialize(ix, alphabet):
    """Index object + alphabet list -> envelope bytes."""
    kind = _kind_of(ix)
    n, sigma, r, s, block, variant = _params_of(ix, kind)
    if kind == "rlbwt":
        sections = _rlbwt_sections(ix, alphabet)
    elif kind == "r-index":
        sections = _rindex_sections(ix, alphabet)
    elif kind == "sr-index":
        sections = _srindex_sections(ix, alphabet)
    elif kind == "r-csa":
        sections = _rcsa_sections(ix, alphabet)
    else:
        sections = _srcsa_sections(ix, alphabet)
    names = sorted(sections)
    header = MAGIC + struct.pack(
        "<IBBHQQQQQI", FORMAT_VERSION, KINDS.index(kind), variant, 0,
        n, sigma, r, s, block, len(names))
    table = bytearray()
    body = bytearray()
    offset = 0
    for name in names:
        blob = sections[name]
        nb = name.encode()
        table += struct.pack("<16sQQ", nb, offset, len(blob))
        body += blob
        offset += len(blob)
    data = header + bytes(table) + bytes(body)
    return data + struct.pack("<I", zlib.crc32(data))


def section_sizes(data):
    """Envelope bytes -> {section name: length in bytes}."""
    _check_crc(data)
    kind, variant, n, sigma, r, s, block, count, t_off = _read_header(data)
    out = {}
    for i in range(count):
        nb, off, ln = struct.unpack_from("<16sQQ", data, t_off + 32 * i)
        out[nb.rstrip(b"\x00").decode()] = ln
    return out


def read_params(data):
    _check_crc(data)
    kind, variant, n, sigma, r, s, block, count, _ = _read_header(data)
    return {"kind": kind, "variant": variant, "n": n, "sigma": sigma,
            "r": r, "s": s, "block": block}


def _read_header(data):
    if data[:4] != MAGIC:
        raise FormatError("bad magic")
    version, kind_id, variant, _, n, sigma, r, s, block, count = (
        struct.unpack_from("<IBBHQQQQQI", data, 4))
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {version}")
    if kind_id >= len(KINDS):
        raise FormatError("unknown index kind")
    return KINDS[kind_id], variant, n, sigma, r, s, block, count, 56


def _check_crc(data):
    if len(data) < 60:
        raise FormatError("truncated envelope")
    (crc,) = struct.unpack_from("<I", data, len(data) - 4)
    if zlib.crc32(data[:-4]) != crc:
        raise FormatError("checksum mismatch")


def deserialize(data):
    """Envelope bytes -> (index object, kind, alphabet)."""
    _check_crc(data)
    kind, variant, n, sigma, r, s, block, count, t_off = _read_header(data)
    body_off = t_off + 32 * count
    sections = {}
    for i in range(count):
        nb, off, ln = struct.unpack_from("<16sQQ", data, t_off + 32 * i)
        name = nb.rstrip(b"\x00").decode()
        sections[name] = data[body_off + off:body_off + off + ln]
    if kind == "rlbwt":
        ix, alphabet = _rlbwt_from(sections, n, sigma)
    elif kind == "r-index":
        ix, alphabet = _rindex_from(sections, n, sigma)
    elif kind == "sr-index":
        ix, alphabet = _srindex_from(sections, n, sigma, s, variant)
    elif kind == "r-csa":
        ix, alphabet = _rcsa_from(sections, n, sigma, block)
    else:
        ix, alphabet = _srcsa_from(sections, n, sigma, s, variant, block)
    declared_r = r
    actual_r = ix.r if kind == "rlbwt" else (
        ix.rl.r if kind in ("r-index", "sr-index") else ix.runs.r)
    if actual_r != declared_r:
        raise FormatError("declared r does not match payload")
    return ix, kind, alphabet


def locating_bits(data):
    """Total serialized size in bits of the locating sections."""
    return 8 * sum(
        ln for name, ln in section_sizes(data).items()
        if name in LOCATING_SECTIONS)


def counting_bits(data):
    return 8 * sum(
        ln for name, ln in section_sizes(data).items()
        if name not in LOCATING_SECTIONS)
