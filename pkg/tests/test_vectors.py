import importlib.resources
import json

import pytest

from zucaead.vectors import (
    TestVector,
    VectorFormatError,
    generate_vectors,
    load_vectors,
    run_vector,
    save_vectors,
)

from .oracles import gxm_seal_ref, mur_seal_ref
from zucaead.zuc import ZucVariant

DATA = importlib.resources.files("zucaead") / "data"


def test_pinned_corpus_matches_generator():
    pinned = [v.to_json_line() for v in load_vectors(str(DATA / "aead_corpus.jsonl"))]
    regenerated = [v.to_json_line() for v in generate_vectors()]
    assert pinned == regenerated


def test_corpus_all_pass():
    for vector in load_vectors(str(DATA / "aead_corpus.jsonl")):
        report = run_vector(vector)
        assert report.passed, report.describe()


def test_corpus_against_reference_compositions():
    for vector in load_vectors(str(DATA / "aead_corpus.jsonl")):
        if vector.mode not in ("gxm", "mur"):
            continue
        variant = ZucVariant.from_name(vector.variant)
        ref = gxm_seal_ref if vector.mode == "gxm" else mur_seal_ref
        c, tag = ref(
            variant,
            bytes.fromhex(vector.key_h),
            bytes.fromhex(vector.key_k),
            bytes.fromhex(vector.nonce),
            bytes.fromhex(vector.aad),
            bytes.fromhex(vector.pt),
            vector.tag_len_bits,
        )
        assert c == bytes.fromhex(vector.ct), vector.id
        assert tag == bytes.fromhex(vector.tag), vector.id


def test_corrupted_ct_fails_with_offset():
    vector = next(iter(load_vectors(str(DATA / "aead_corpus.jsonl")).__iter__()))
    # pick a row with a nonempty ciphertext
    for vector in load_vectors(str(DATA / "aead_corpus.jsonl")):
        if vector.mode == "gxm" and len(vector.ct) >= 8:
            break
    ct = bytearray(bytes.fromhex(vector.ct))
    ct[3] ^= 0xFF
    vector.ct = ct.hex()
    report = run_vector(vector)
    assert not report.passed
    assert any(m.field == "ct" and m.offset == 3 for m in report.mismatches)


def test_corrupted_tag_detected():
    for vector in load_vectors(str(DATA / "aead_corpus.jsonl")):
        if vector.mode == "mur":
            break
    tag = bytearray(bytes.fromhex(vector.tag))
    tag[0] ^= 0x01
    vector.tag = tag.hex()
    report = run_vector(vector)
    assert not report.passed
    assert any(m.field == "tag" for m in report.mismatches)


def test_malformed_vector_names_field():
    vector = TestVector(id="bad", variant="zuc128", mode="gxm", key_h="zz", tag_len_bits=0)
    with pytest.raises(VectorFormatError) as excinfo:
        run_vector(vector)
    assert excinfo.value.field == "key_h"

    with pytest.raises(VectorFormatError) as excinfo:
        run_vector(TestVector(id="bad2", variant="zuc999", mode="gxm"))
    assert excinfo.value.field == "variant"

    with pytest.raises(VectorFormatError) as excinfo:
        run_vector(TestVector(id="bad3", variant="zuc128", mode="nope"))
    assert excinfo.value.field == "mode"


def test_tag_len_consistency_enforced():
    vector = TestVector(
        id="bad-taglen", variant="zuc128", mode="gxm",
        key_h="00" * 16, key_k="00" * 16, nonce="00" * 16,
        tag="aabbccdd", tag_len_bits=64,
    )
    with pytest.raises(VectorFormatError) as excinfo:
        run_vector(vector)
    assert excinfo.value.field == "tag_len_bits"


def test_unknown_json_field_rejected():
    line = json.dumps({"id": "x", "variant": "zuc128", "mode": "gxm", "extra": 1})
    with pytest.raises(VectorFormatError) as excinfo:
        TestVector.from_json_line(line)
    assert excinfo.value.field == "extra"


def test_missing_required_field_rejected():
    with pytest.raises(VectorFormatError):
        TestVector.from_json_line(json.dumps({"id": "x", "variant": "zuc128"}))


def test_roundtrip_save_load(tmp_path):
    vectors = generate_vectors(seed="test-roundtrip", sizes=(0, 5), tag_bits=(32,))
    path = tmp_path / "vs.jsonl"
    save_vectors(path, vectors)
    loaded = list(load_vectors(path))
    assert [v.to_json_line() for v in loaded] == [v.to_json_line() for v in vectors]
    for vector in loaded:
        assert run_vector(vector).passed


def test_generator_seed_changes_output():
    a = generate_vectors(seed="seed-a", sizes=(4,), tag_bits=(32,))
    b = generate_vectors(seed="seed-b", sizes=(4,), tag_bits=(32,))
    assert [v.ct for v in a] != [v.ct for v in b]


def test_keystream_vector_mismatch_reports_ct():
    vector = TestVector(
        id="ks-bad", variant="zuc128", mode="keystream",
        key_k="00" * 16, nonce="00" * 16,
        ct="27bede74018082db",  # last byte off by one
    )
    report = run_vector(vector)
    assert not report.passed
    assert report.mismatches[0].field == "ct"
    assert report.mismatches[0].offset == 7
