# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: ZUC word generator, GHASH block folder, byte XOR.

Interface-compatible with ``_pure``; selected by ``_backend`` when built.
The ZUC tables and loading schedules are transcribed from the published
ZUC-128 and ZUC-256 algorithm documents.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from libc.stdint cimport uint8_t, uint32_t, uint64_t
from libc.string cimport memset

BACKEND = "c"

cdef uint8_t[256] S0_TAB = [
    0x3E, 0x72, 0x5B, 0x47, 0xCA, 0xE0, 0x00, 0x33, 0x04, 0xD1, 0x54, 0x98, 0x09, 0xB9, 0x6D, 0xCB,
    0x7B, 0x1B, 0xF9, 0x32, 0xAF, 0x9D, 0x6A, 0xA5, 0xB8, 0x2D, 0xFC, 0x1D, 0x08, 0x53, 0x03, 0x90,
    0x4D, 0x4E, 0x84, 0x99, 0xE4, 0xCE, 0xD9, 0x91, 0xDD, 0xB6, 0x85, 0x48, 0x8B, 0x29, 0x6E, 0xAC,
    0xCD, 0xC1, 0xF8, 0x1E, 0x73, 0x43, 0x69, 0xC6, 0xB5, 0xBD, 0xFD, 0x39, 0x63, 0x20, 0xD4, 0x38,
    0x76, 0x7D, 0xB2, 0xA7, 0xCF, 0xED, 0x57, 0xC5, 0xF3, 0x2C, 0xBB, 0x14, 0x21, 0x06, 0x55, 0x9B,
    0xE3, 0xEF, 0x5E, 0x31, 0x4F, 0x7F, 0x5A, 0xA4, 0x0D, 0x82, 0x51, 0x49, 0x5F, 0xBA, 0x58, 0x1C,
    0x4A, 0x16, 0xD5, 0x17, 0xA8, 0x92, 0x24, 0x1F, 0x8C, 0xFF, 0xD8, 0xAE, 0x2E, 0x01, 0xD3, 0xAD,
    0x3B, 0x4B, 0xDA, 0x46, 0xEB, 0xC9, 0xDE, 0x9A, 0x8F, 0x87, 0xD7, 0x3A, 0x80, 0x6F, 0x2F, 0xC8,
    0xB1, 0xB4, 0x37, 0xF7, 0x0A, 0x22, 0x13, 0x28, 0x7C, 0xCC, 0x3C, 0x89, 0xC7, 0xC3, 0x96, 0x56,
    0x07, 0xBF, 0x7E, 0xF0, 0x0B, 0x2B, 0x97, 0x52, 0x35, 0x41, 0x79, 0x61, 0xA6, 0x4C, 0x10, 0xFE,
    0xBC, 0x26, 0x95, 0x88, 0x8A, 0xB0, 0xA3, 0xFB, 0xC0, 0x18, 0x94, 0xF2, 0xE1, 0xE5, 0xE9, 0x5D,
    0xD0, 0xDC, 0x11, 0x66, 0x64, 0x5C, 0xEC, 0x59, 0x42, 0x75, 0x12, 0xF5, 0x74, 0x9C, 0xAA, 0x23,
    0x0E, 0x86, 0xAB, 0xBE, 0x2A, 0x02, 0xE7, 0x67, 0xE6, 0x44, 0xA2, 0x6C, 0xC2, 0x93, 0x9F, 0xF1,
    0xF6, 0xFA, 0x36, 0xD2, 0x50, 0x68, 0x9E, 0x62, 0x71, 0x15, 0x3D, 0xD6, 0x40, 0xC4, 0xE2, 0x0F,
    0x8E, 0x83, 0x77, 0x6B, 0x25, 0x05, 0x3F, 0x0C, 0x30, 0xEA, 0x70, 0xB7, 0xA1, 0xE8, 0xA9, 0x65,
    0x8D, 0x27, 0x1A, 0xDB, 0x81, 0xB3, 0xA0, 0xF4, 0x45, 0x7A, 0x19, 0xDF, 0xEE, 0x78, 0x34, 0x60,
]

cdef uint8_t[256] S1_TAB = [
    0x55, 0xC2, 0x63, 0x71, 0x3B, 0xC8, 0x47, 0x86, 0x9F, 0x3C, 0xDA, 0x5B, 0x29, 0xAA, 0xFD, 0x77,
    0x8C, 0xC5, 0x94, 0x0C, 0xA6, 0x1A, 0x13, 0x00, 0xE3, 0xA8, 0x16, 0x72, 0x40, 0xF9, 0xF8, 0x42,
    0x44, 0x26, 0x68, 0x96, 0x81, 0xD9, 0x45, 0x3E, 0x10, 0x76, 0xC6, 0xA7, 0x8B, 0x39, 0x43, 0xE1,
    0x3A, 0xB5, 0x56, 0x2A, 0xC0, 0x6D, 0xB3, 0x05, 0x22, 0x66, 0xBF, 0xDC, 0x0B, 0xFA, 0x62, 0x48,
    0xDD, 0x20, 0x11, 0x06, 0x36, 0xC9, 0xC1, 0xCF, 0xF6, 0x27, 0x52, 0xBB, 0x69, 0xF5, 0xD4, 0x87,
    0x7F, 0x84, 0x4C, 0xD2, 0x9C, 0x57, 0xA4, 0xBC, 0x4F, 0x9A, 0xDF, 0xFE, 0xD6, 0x8D, 0x7A, 0xEB,
    0x2B, 0x53, 0xD8, 0x5C, 0xA1, 0x14, 0x17, 0xFB, 0x23, 0xD5, 0x7D, 0x30, 0x67, 0x73, 0x08, 0x09,
    0xEE, 0xB7, 0x70, 0x3F, 0x61, 0xB2, 0x19, 0x8E, 0x4E, 0xE5, 0x4B, 0x93, 0x8F, 0x5D, 0xDB, 0xA9,
    0xAD, 0xF1, 0xAE, 0x2E, 0xCB, 0x0D, 0xFC, 0xF4, 0x2D, 0x46, 0x6E, 0x1D, 0x97, 0xE8, 0xD1, 0xE9,
    0x4D, 0x37, 0xA5, 0x75, 0x5E, 0x83, 0x9E, 0xAB, 0x82, 0x9D, 0xB9, 0x1C, 0xE0, 0xCD, 0x49, 0x89,
    0x01, 0xB6, 0xBD, 0x58, 0x24, 0xA2, 0x5F, 0x38, 0x78, 0x99, 0x15, 0x90, 0x50, 0xB8, 0x95, 0xE4,
    0xD0, 0x91, 0xC7, 0xCE, 0xED, 0x0F, 0xB4, 0x6F, 0xA0, 0xCC, 0xF0, 0x02, 0x4A, 0x79, 0xC3, 0xDE,
    0xA3, 0xEF, 0xEA, 0x51, 0xE6, 0x6B, 0x18, 0xEC, 0x1B, 0x2C, 0x80, 0xF7, 0x74, 0xE7, 0xFF, 0x21,
    0x5A, 0x6A, 0x54, 0x1E, 0x41, 0x31, 0x92, 0x35, 0xC4, 0x33, 0x07, 0x0A, 0xBA, 0x7E, 0x0E, 0x34,
    0x88, 0xB1, 0x98, 0x7C, 0xF3, 0x3D, 0x60, 0x6C, 0x7B, 0xCA, 0xD3, 0x1F, 0x32, 0x65, 0x04, 0x28,
    0x64, 0xBE, 0x85, 0x9B, 0x2F, 0x59, 0x8A, 0xD7, 0xB0, 0x25, 0xAC, 0xAF, 0x12, 0x03, 0xE2, 0xF2,
]

cdef uint32_t[16] D128_TAB = [
    0x44D7, 0x26BC, 0x626B, 0x135E, 0x5789, 0x35E2, 0x7135, 0x09AF,
    0x4D78, 0x2F13, 0x6BC4, 0x1AF1, 0x5E26, 0x3C4D, 0x789A, 0x47AC,
]

cdef uint32_t[16] D256_TAB = [
    0x22, 0x2F, 0x24, 0x2A, 0x6D, 0x40, 0x40, 0x40,
    0x40, 0x40, 0x40, 0x40, 0x40, 0x52, 0x10, 0x30,
]


cdef inline uint32_t _rol(uint32_t x, int n) noexcept:
    return (x << n) | (x >> (32 - n))


cdef inline uint32_t _sbox(uint32_t x) noexcept:
    return (
        (<uint32_t> S0_TAB[(x >> 24) & 0xFF] << 24)
        | (<uint32_t> S1_TAB[(x >> 16) & 0xFF] << 16)
        | (<uint32_t> S0_TAB[(x >> 8) & 0xFF] << 8)
        | (<uint32_t> S1_TAB[x & 0xFF])
    )


cdef inline uint32_t _mod_m31(uint64_t acc) noexcept:
    # Reduce mod 2^31 - 1 by folding; result is in [1, 2^31 - 1] whenever the
    # residue is nonzero, matching the "0 becomes 2^31 - 1" rule below.
    cdef uint32_t r
    acc = (acc >> 31) + (acc & 0x7FFFFFFF)
    r = <uint32_t> ((acc >> 31) + (acc & 0x7FFFFFFF))
    if r == 0x7FFFFFFF:
        return r
    if r >= 0x7FFFFFFF:
        r -= 0x7FFFFFFF
    if r == 0:
        r = 0x7FFFFFFF
    return r


cdef class ZucCore:
    """ZUC state machine emitting 32-bit keystream words (compiled)."""

    cdef uint32_t s[16]
    cdef uint32_t r1, r2

    def __init__(self, int kind, const unsigned char[:] key, const unsigned char[:] iv):
        if kind == 128:
            if key.shape[0] != 16 or iv.shape[0] != 16:
                raise ValueError("ZUC-128 needs a 16-byte key and 16-byte IV")
            self._load128(key, iv)
        elif kind == 256:
            if key.shape[0] != 32 or iv.shape[0] != 23:
                raise ValueError("ZUC-256 needs a 32-byte key and 23-byte IV")
            self._load256(key, iv)
        else:
            raise ValueError(f"unknown ZUC kind: {kind!r}")
        self.r1 = 0
        self.r2 = 0
        self._init_rounds()

    cdef void _load128(self, const unsigned char[:] k, const unsigned char[:] iv) noexcept:
        cdef int i
        for i in range(16):
            self.s[i] = (<uint32_t> k[i] << 23) | (D128_TAB[i] << 8) | <uint32_t> iv[i]

    cdef void _load256(self, const unsigned char[:] k, const unsigned char[:] iv) noexcept:
        cdef uint32_t iv6[8]
        cdef uint32_t* d = D256_TAB
        # Last 6 IV bytes split big-endian into eight 6-bit cells iv17..iv24.
        iv6[0] = iv[17] >> 2
        iv6[1] = ((iv[17] & 0x3) << 4) | (iv[18] >> 4)
        iv6[2] = ((iv[18] & 0xF) << 2) | (iv[19] >> 6)
        iv6[3] = iv[19] & 0x3F
        iv6[4] = iv[20] >> 2
        iv6[5] = ((iv[20] & 0x3) << 4) | (iv[21] >> 4)
        iv6[6] = ((iv[21] & 0xF) << 2) | (iv[22] >> 6)
        iv6[7] = iv[22] & 0x3F
        self.s[0] = (<uint32_t> k[0] << 23) | (d[0] << 16) | (<uint32_t> k[21] << 8) | k[16]
        self.s[1] = (<uint32_t> k[1] << 23) | (d[1] << 16) | (<uint32_t> k[22] << 8) | k[17]
        self.s[2] = (<uint32_t> k[2] << 23) | (d[2] << 16) | (<uint32_t> k[23] << 8) | k[18]
        self.s[3] = (<uint32_t> k[3] << 23) | (d[3] << 16) | (<uint32_t> k[24] << 8) | k[19]
        self.s[4] = (<uint32_t> k[4] << 23) | (d[4] << 16) | (<uint32_t> k[25] << 8) | k[20]
        self.s[5] = (<uint32_t> iv[0] << 23) | ((d[5] | iv6[0]) << 16) | (<uint32_t> k[5] << 8) | k[26]
        self.s[6] = (<uint32_t> iv[1] << 23) | ((d[6] | iv6[1]) << 16) | (<uint32_t> k[6] << 8) | k[27]
        self.s[7] = (<uint32_t> iv[10] << 23) | ((d[7] | iv6[2]) << 16) | (<uint32_t> k[7] << 8) | iv[2]
        self.s[8] = (<uint32_t> k[8] << 23) | ((d[8] | iv6[3]) << 16) | (<uint32_t> iv[3] << 8) | iv[11]
        self.s[9] = (<uint32_t> k[9] << 23) | ((d[9] | iv6[4]) << 16) | (<uint32_t> iv[12] << 8) | iv[4]
        self.s[10] = (<uint32_t> iv[5] << 23) | ((d[10] | iv6[5]) << 16) | (<uint32_t> k[10] << 8) | k[28]
        self.s[11] = (<uint32_t> k[11] << 23) | ((d[11] | iv6[6]) << 16) | (<uint32_t> iv[6] << 8) | iv[13]
        self.s[12] = (<uint32_t> k[12] << 23) | ((d[12] | iv6[7]) << 16) | (<uint32_t> iv[7] << 8) | iv[14]
        self.s[13] = (<uint32_t> k[13] << 23) | (d[13] << 16) | (<uint32_t> iv[15] << 8) | iv[8]
        self.s[14] = (<uint32_t> k[14] << 23) | ((d[14] | (k[31] >> 4)) << 16) | (<uint32_t> iv[16] << 8) | iv[9]
        self.s[15] = (<uint32_t> k[15] << 23) | ((d[15] | (k[31] & 0xF)) << 16) | (<uint32_t> k[30] << 8) | k[29]

    cdef void _lfsr_shift(self, uint32_t f) noexcept:
        cdef int i
        for i in range(15):
            self.s[i] = self.s[i + 1]
        self.s[15] = f

    cdef void _init_rounds(self) noexcept:
        cdef uint32_t x0, x1, x2, w, w1, w2, u, v, r1, r2, f
        cdef uint64_t acc
        cdef uint32_t* s = self.s
        cdef int rnd
        r1 = self.r1
        r2 = self.r2
        for rnd in range(33):
            x0 = ((s[15] & 0x7FFF8000u) << 1) | (s[14] & 0xFFFFu)
            x1 = ((s[11] & 0xFFFFu) << 16) | (s[9] >> 15)
            x2 = ((s[7] & 0xFFFFu) << 16) | (s[5] >> 15)
            w = (x0 ^ r1) + r2
            w1 = r1 + x1
            w2 = r2 ^ x2
            u = (w1 << 16) | (w2 >> 16)
            v = (w2 << 16) | (w1 >> 16)
            r1 = _sbox(u ^ _rol(u, 2) ^ _rol(u, 10) ^ _rol(u, 18) ^ _rol(u, 24))
            r2 = _sbox(v ^ _rol(v, 8) ^ _rol(v, 14) ^ _rol(v, 22) ^ _rol(v, 30))
            acc = (
                <uint64_t> s[0]
                + ((<uint64_t> s[0]) << 8)
                + ((<uint64_t> s[4]) << 20)
                + ((<uint64_t> s[10]) << 21)
                + ((<uint64_t> s[13]) << 17)
                + ((<uint64_t> s[15]) << 15)
            )
            if rnd < 32:
                acc += w >> 1
            f = _mod_m31(acc)
            self._lfsr_shift(f)
        self.r1 = r1
        self.r2 = r2

    def read_words(self, Py_ssize_t nwords):
        """Next ``nwords`` keystream words, big-endian serialized."""
        if nwords < 0:
            raise ValueError("word count must be non-negative")
        cdef bytes out = PyBytes_FromStringAndSize(NULL, 4 * nwords)
        cdef unsigned char* buf = <unsigned char*> PyBytes_AS_STRING(out)
        cdef uint32_t x0, x1, x2, x3, w, w1, w2, u, v, z, f, r1, r2
        cdef uint64_t acc
        cdef uint32_t* s = self.s
        cdef Py_ssize_t i, pos = 0
        r1 = self.r1
        r2 = self.r2
        for i in range(nwords):
            x0 = ((s[15] & 0x7FFF8000u) << 1) | (s[14] & 0xFFFFu)
            x1 = ((s[11] & 0xFFFFu) << 16) | (s[9] >> 15)
            x2 = ((s[7] & 0xFFFFu) << 16) | (s[5] >> 15)
            x3 = ((s[2] & 0xFFFFu) << 16) | (s[0] >> 15)
            w = (x0 ^ r1) + r2
            w1 = r1 + x1
            w2 = r2 ^ x2
            u = (w1 << 16) | (w2 >> 16)
            v = (w2 << 16) | (w1 >> 16)
            r1 = _sbox(u ^ _rol(u, 2) ^ _rol(u, 10) ^ _rol(u, 18) ^ _rol(u, 24))
            r2 = _sbox(v ^ _rol(v, 8) ^ _rol(v, 14) ^ _rol(v, 22) ^ _rol(v, 30))
            z = w ^ x3
            buf[pos] = <unsigned char> (z >> 24)
            buf[pos + 1] = <unsigned char> ((z >> 16) & 0xFF)
            buf[pos + 2] = <unsigned char> ((z >> 8) & 0xFF)
            buf[pos + 3] = <unsigned char> (z & 0xFF)
            pos += 4
            acc = (
                <uint64_t> s[0]
                + ((<uint64_t> s[0]) << 8)
                + ((<uint64_t> s[4]) << 20)
                + ((<uint64_t> s[10]) << 21)
                + ((<uint64_t> s[13]) << 17)
                + ((<uint64_t> s[15]) << 15)
            )
            f = _mod_m31(acc)
            self._lfsr_shift(f)
        self.r1 = r1
        self.r2 = r2
        return out

    def close(self):
        """Best-effort scrub of the cipher state."""
        memset(self.s, 0, sizeof(self.s))
        self.r1 = 0
        self.r2 = 0

    def __dealloc__(self):
        memset(self.s, 0, sizeof(self.s))
        self.r1 = 0
        self.r2 = 0


cdef inline uint64_t _be64(const unsigned char* p) noexcept:
    return (
        (<uint64_t> p[0] << 56) | (<uint64_t> p[1] << 48)
        | (<uint64_t> p[2] << 40) | (<uint64_t> p[3] << 32)
        | (<uint64_t> p[4] << 24) | (<uint64_t> p[5] << 16)
        | (<uint64_t> p[6] << 8) | (<uint64_t> p[7])
    )


cdef inline void _put_be64(unsigned char* p, uint64_t x) noexcept:
    cdef int i
    for i in range(8):
        p[i] = <unsigned char> (x >> (56 - 8 * i))


cdef class GhashCore:
    """Keyed GHASH block folder with a precomputed 4-bit table (compiled)."""

    cdef uint64_t th[16]
    cdef uint64_t tl[16]
    cdef uint64_t rem4[16]

    def __init__(self, const unsigned char[:] h):
        if h.shape[0] != 16:
            raise ValueError("GHASH key must be exactly 16 bytes")
        cdef uint64_t vh = _be64(&h[0])
        cdef uint64_t vl = _be64(&h[8])
        cdef uint64_t carry, rh, rl
        cdef int i, j, k
        # T[n] = n(x) * H; within a nibble bit 3 is the first bit in string
        # order, so T[8] = H and halving the index multiplies by x.
        self.th[0] = 0
        self.tl[0] = 0
        self.th[8] = vh
        self.tl[8] = vl
        i = 4
        while i >= 1:
            carry = vl & 1
            vl = (vl >> 1) | (vh << 63)
            vh >>= 1
            if carry:
                vh ^= 0xE100000000000000u
            self.th[i] = vh
            self.tl[i] = vl
            i >>= 1
        for i in (2, 4, 8):
            for j in range(1, i):
                self.th[i | j] = self.th[i] ^ self.th[j]
                self.tl[i | j] = self.tl[i] ^ self.tl[j]
        # Wrap terms for a 4-bit shift: bit k of the shifted-out nibble held
        # the x^(127-k) coefficient and re-enters as x^(3-k)*(1+x+x^2+x^7).
        cdef uint64_t single[4]
        rh = 0xE100000000000000u
        for j in range(4):
            single[j] = rh
            rh >>= 1  # lone high terms: shifting stays within the top bits
        for i in range(16):
            rh = 0
            for k in range(4):
                if i & (1 << k):
                    rh ^= single[3 - k]
            self.rem4[i] = rh

    cdef void _gmult(self, uint64_t* zh_io, uint64_t* zl_io) noexcept:
        cdef uint64_t vh = zh_io[0]
        cdef uint64_t vl = zl_io[0]
        cdef uint64_t zh, zl
        cdef unsigned int nib, rem
        cdef int k
        nib = <unsigned int> (vl & 0xF)
        zh = self.th[nib]
        zl = self.tl[nib]
        for k in range(1, 32):
            rem = <unsigned int> (zl & 0xF)
            zl = (zl >> 4) | (zh << 60)
            zh = (zh >> 4) ^ self.rem4[rem]
            if k < 16:
                nib = <unsigned int> ((vl >> (4 * k)) & 0xF)
            else:
                nib = <unsigned int> ((vh >> (4 * (k - 16))) & 0xF)
            zh ^= self.th[nib]
            zl ^= self.tl[nib]
        zh_io[0] = zh
        zl_io[0] = zl

    def fold(self, const unsigned char[:] y, const unsigned char[:] blocks):
        """Fold zero or more 16-byte blocks into the accumulator ``y``."""
        if y.shape[0] != 16:
            raise ValueError("accumulator must be exactly 16 bytes")
        if blocks.shape[0] % 16:
            raise ValueError("block data must be a multiple of 16 bytes")
        cdef uint64_t zh = _be64(&y[0])
        cdef uint64_t zl = _be64(&y[8])
        cdef Py_ssize_t off, n = blocks.shape[0]
        for off in range(0, n, 16):
            zh ^= _be64(&blocks[off])
            zl ^= _be64(&blocks[off + 8])
            self._gmult(&zh, &zl)
        cdef bytes out = PyBytes_FromStringAndSize(NULL, 16)
        cdef unsigned char* buf = <unsigned char*> PyBytes_AS_STRING(out)
        _put_be64(buf, zh)
        _put_be64(buf + 8, zl)
        return out


def xor_bytes(const unsigned char[:] a, const unsigned char[:] b):
    """XOR two equal-length byte strings."""
    cdef Py_ssize_t n = a.shape[0]
    if b.shape[0] != n:
        raise ValueError("xor operands must have equal length")
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    if n == 0:
        return out
    cdef unsigned char* buf = <unsigned char*> PyBytes_AS_STRING(out)
    cdef const unsigned char* pa = &a[0]
    cdef const unsigned char* pb = &b[0]
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = pa[i] ^ pb[i]
    return out
