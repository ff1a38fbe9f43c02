import pytest

from zucaead import AeadKey, AuthenticationFailure, GxmParams, gxm_open, gxm_seal
from zucaead.ghash import ghash
from zucaead.zuc import ZucVariant, zuc_l

from .oracles import gxm_seal_ref

VARIANTS = list(ZucVariant)


def _random_key(rng, variant):
    return AeadKey(h=rng.randbytes(16), k=rng.randbytes(variant.key_bytes))


@pytest.mark.parametrize("variant", VARIANTS)
def test_round_trip(variant, rng, kernel_backend):
    params = GxmParams(variant)
    for size in (0, 1, 15, 16, 17, 255):
        key = _random_key(rng, variant)
        nonce = rng.randbytes(variant.iv_bytes)
        aad = rng.randbytes(rng.randrange(0, 32))
        pt = rng.randbytes(size)
        c, tag = gxm_seal(params, key, nonce, aad, pt)
        assert len(c) == len(pt)
        assert len(tag) == 16
        assert gxm_open(params, key, nonce, aad, c, tag) == pt


@pytest.mark.parametrize("tag_bits", [32, 64, 96, 128])
def test_tag_widths(tag_bits, rng):
    params = GxmParams(ZucVariant.ZUC128, tag_bits)
    key = _random_key(rng, ZucVariant.ZUC128)
    nonce = rng.randbytes(16)
    c, tag = gxm_seal(params, key, nonce, b"aad", b"body")
    assert len(tag) == tag_bits // 8
    assert gxm_open(params, key, nonce, b"aad", c, tag) == b"body"
    # A tag of a narrower width than configured is a parameter error,
    # not an authentication failure.
    with pytest.raises(ValueError):
        gxm_open(params, key, nonce, b"aad", c, tag[:-1])


def test_invalid_tag_bits_rejected():
    for bad in (0, 24, 129, 136, 65):
        with pytest.raises(ValueError):
            GxmParams(ZucVariant.ZUC128, bad)


def test_empty_inputs_tag_is_masked_ghash_of_nothing(rng):
    # With P = A = empty, the tag is just the keystream's first block
    # truncated, since the hash of two empty strings is zero.
    variant = ZucVariant.ZUC128
    key = _random_key(rng, variant)
    nonce = rng.randbytes(16)
    c, tag = gxm_seal(GxmParams(variant, 64), key, nonce, b"", b"")
    assert c == b""
    assert tag == zuc_l(variant, key.k, nonce, 16)[:8]


def test_parameter_errors(rng):
    params = GxmParams(ZucVariant.ZUC128)
    key = _random_key(rng, ZucVariant.ZUC128)
    with pytest.raises(ValueError):
        gxm_seal(params, key, bytes(15), b"", b"")  # short nonce
    with pytest.raises(ValueError):
        gxm_seal(params, AeadKey(h=bytes(15), k=key.k), bytes(16), b"", b"")
    with pytest.raises(ValueError):
        gxm_seal(params, AeadKey(h=key.h, k=bytes(17)), bytes(16), b"", b"")


@pytest.mark.parametrize("variant", VARIANTS)
def test_matches_straight_line_reference(variant, rng):
    for _ in range(25):
        tag_bits = rng.choice([32, 64, 96, 128])
        params = GxmParams(variant, tag_bits)
        key = _random_key(rng, variant)
        nonce = rng.randbytes(variant.iv_bytes)
        aad = rng.randbytes(rng.randrange(0, 40))
        pt = rng.randbytes(rng.randrange(0, 120))
        assert gxm_seal(params, key, nonce, aad, pt) == gxm_seal_ref(
            variant, key.h, key.k, nonce, aad, pt, tag_bits
        )


def test_bit_flips_rejected_exhaustively(rng):
    variant = ZucVariant.ZUC128
    params = GxmParams(variant)
    key = _random_key(rng, variant)
    nonce = rng.randbytes(16)
    aad = rng.randbytes(4)
    pt = rng.randbytes(5)
    c, tag = gxm_seal(params, key, nonce, aad, pt)
    for label, blob in (("nonce", nonce), ("aad", aad), ("ct", c), ("tag", tag)):
        for bit in range(8 * len(blob)):
            mutated = bytearray(blob)
            mutated[bit // 8] ^= 1 << (bit % 8)
            args = {
                "nonce": nonce, "aad": aad, "ct": c, "tag": tag,
                label: bytes(mutated),
            }
            with pytest.raises(AuthenticationFailure):
                gxm_open(params, key, args["nonce"], args["aad"], args["ct"], args["tag"])


def test_nonce_reuse_leaks_plaintext_xor(rng):
    # The documented catastrophic failure mode of the nonce-based mode:
    # same key and nonce reuse the keystream, so c1 xor c2 = p1 xor p2.
    variant = ZucVariant.ZUC128
    params = GxmParams(variant)
    key = _random_key(rng, variant)
    nonce = rng.randbytes(16)
    p1 = rng.randbytes(64)
    p2 = rng.randbytes(64)
    c1, _ = gxm_seal(params, key, nonce, b"", p1)
    c2, _ = gxm_seal(params, key, nonce, b"", p2)
    xor = bytes(a ^ b for a, b in zip(c1, c2))
    assert xor == bytes(a ^ b for a, b in zip(p1, p2))


def test_tag_mask_structure(rng):
    # For a fixed (key, nonce), tags differ exactly by the truncated
    # difference of the two hashes; the keystream mask cancels.
    variant = ZucVariant.ZUC128
    params = GxmParams(variant, 64)
    key = _random_key(rng, variant)
    nonce = rng.randbytes(16)
    p1, a1 = rng.randbytes(40), rng.randbytes(9)
    p2, a2 = rng.randbytes(40), rng.randbytes(13)
    c1, t1 = gxm_seal(params, key, nonce, a1, p1)
    c2, t2 = gxm_seal(params, key, nonce, a2, p2)
    g1 = ghash(key.h, a1, c1)
    g2 = ghash(key.h, a2, c2)
    diff = bytes(a ^ b for a, b in zip(g1, g2))[:8]
    assert bytes(a ^ b for a, b in zip(t1, t2)) == diff


def test_failure_carries_no_data(rng):
    params = GxmParams(ZucVariant.ZUC128)
    key = _random_key(rng, ZucVariant.ZUC128)
    nonce = rng.randbytes(16)
    c, tag = gxm_seal(params, key, nonce, b"", b"secret")
    bad_tag = bytes(b ^ 1 for b in tag)
    with pytest.raises(AuthenticationFailure) as excinfo:
        gxm_open(params, key, nonce, b"", c, bad_tag)
    assert excinfo.value.args == ("authentication failed",)
    assert not excinfo.value.__dict__


def test_length_bound_checked(rng):
    params = GxmParams(ZucVariant.ZUC128)
    key = _random_key(rng, ZucVariant.ZUC128)

    class _HugeBytes(bytes):
        def __len__(self):
            return 2**61

    with pytest.raises(ValueError):
        gxm_seal(params, key, bytes(16), _HugeBytes(), b"")
