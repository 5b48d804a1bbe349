"""Truncated products of integer coefficient lists.

Small or sparse operands go through a direct double loop.  Long dense
operands are multiplied by Kronecker substitution: each list is packed
into one big integer (one fixed-width slot per coefficient), the two
integers are multiplied with GMP, and the slots are read back.  The
result is exact; the slot width is chosen so no slot can overflow.
"""

from __future__ import annotations

from typing import Sequence

import gmpy2

# below this many slot-products the double loop wins
_SCHOOLBOOK_WORK = 40_000


def schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of ``a * b`` by direct convolution."""
    out = [0] * n
    outer = [(i, x) for i, x in enumerate(a[:n]) if x]
    inner = [(j, x) for j, x in enumerate(b[:n]) if x]
    if len(outer) > len(inner):
        outer, inner = inner, outer
    for i, ai in outer:
        top = n - i
        for j, bj in inner:
            if j >= top:
                break
            out[i + j] += ai * bj
    return out


def _max_bits(c: Sequence[int]) -> int:
    m = 0
    for x in c:
        if x:
            bl = x.bit_length()
            if bl > m:
                m = bl
    return m


def _pack(c: Sequence[int], nb: int):
    # one preallocated buffer per sign keeps the transient footprint at one copy
    buf = bytearray(nb * len(c))
    has_neg = False
    for i, x in enumerate(c):
        if x > 0:
            buf[i * nb:(i + 1) * nb] = x.to_bytes(nb, "little")
        elif x < 0:
            has_neg = True
    val = gmpy2.mpz.from_bytes(buf, "little")
    if has_neg:
        buf[:] = bytes(len(buf))
        for i, x in enumerate(c):
            if x < 0:
                buf[i * nb:(i + 1) * nb] = (-x).to_bytes(nb, "little")
        val -= gmpy2.mpz.from_bytes(buf, "little")
    return val


def _unpack(r, nb: int, n: int, signed: bool) -> list[int]:
    bits = 8 * nb
    raw = memoryview(gmpy2.f_mod_2exp(r, bits * n).to_bytes(nb * n, "little"))
    frm = int.from_bytes
    if not signed:
        return [frm(raw[i:i + nb], "little") for i in range(0, nb * n, nb)]
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    carry = 0
    for i in range(0, nb * n, nb):
        u = frm(raw[i:i + nb], "little") + carry
        if u >= half:
            out.append(u - full)
            carry = 1
        else:
            out.append(u)
            carry = 0
    return out


def kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of ``a * b`` via a single big-integer product."""
    a = a[:n]
    b = b[:n]
    if not a or not b:
        return [0] * n
    ba, bb = _max_bits(a), _max_bits(b)
    if ba == 0 or bb == 0:
        return [0] * n
    signed = any(x < 0 for x in a) or any(x < 0 for x in b)
    bits = ba + bb + min(len(a), len(b)).bit_length() + 2
    nb = (bits + 7) // 8
    pa = _pack(a, nb)
    if a is b:
        r = pa * pa
    else:
        r = pa * _pack(b, nb)
    del pa
    return _unpack(r, nb, n, signed)


def _nnz(c: Sequence[int]) -> int:
    return sum(1 for x in c if x)


def mul_trunc(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer lists."""
    if n <= 0:
        return []
    la, lb = min(len(a), n), min(len(b), n)
    if la == 0 or lb == 0:
        return [0] * n
    if la * lb <= _SCHOOLBOOK_WORK:
        return schoolbook(a, b, n)
    sparse = min(_nnz(a[:la]), _nnz(b[:lb]))
    if sparse * n <= _SCHOOLBOOK_WORK or sparse <= 4:
        return schoolbook(a, b, n)
    return kronecker(a, b, n)
