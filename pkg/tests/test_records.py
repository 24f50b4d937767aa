from dataclasses import replace

import numpy as np
import pytest

from sdcodes import textfmt
from sdcodes.binary import BinaryCode
from sdcodes.census import WeightProfile, low_weight_census
from sdcodes.circulant import RingMatrix
from sdcodes.constructions import theorem1_generator
from sdcodes.errors import ParseError
from sdcodes.records import (
    CodeRecord,
    RecordStore,
    fixture,
    published_records,
    parse_records,
    query,
    verify_record,
    with_analysis,
)
from sdcodes.rings import Ring


def test_matrix_text_roundtrip():
    code = fixture("C56_1").reconstruct()
    mt = textfmt.MatrixText.from_code(code, comments=["params here"], trailer=["fit here"])
    text = mt.dumps()
    assert text.splitlines()[1] == "code n=56 k=28 field=F2"
    back = textfmt.loads(text)
    assert np.array_equal(back.data, mt.data)
    assert back.comments == ["params here"] and back.trailer == ["fit here"]
    assert back.binary_code() == code


def test_ring_matrix_text():
    m = RingMatrix(Ring.F2UV, np.array([[11, 0, 15], [1, 2, 3]]))
    back = textfmt.loads(textfmt.MatrixText.from_matrix(m).dumps())
    assert back.ring is Ring.F2UV and back.matrix() == m


@pytest.mark.parametrize(
    "text,where",
    [
        ("101\n", "line 1"),
        ("code n=3 k=1 field=F2\n10\n", "line 2"),
        ("code n=3 k=1 field=F2\n102\n", "line 2"),
        ("code n=3 k=2 field=F2\n101\n", "expected k=2"),
        ("code n=3 k=1 field=F2\n101\n110\n", "line 3"),
        ("code n=3 k=1 field=Q\n101\n", "Q"),
        ("# nothing\n", "header"),
    ],
)
def test_matrix_text_errors(text, where):
    with pytest.raises(ParseError, match=where):
        textfmt.loads(text)


def test_fixture_count_and_kinds():
    recs = published_records()
    labels = [r.label for r in recs]
    assert len(recs) == 61 and len(set(labels)) == 61
    assert sum(r.label.startswith("C94_") for r in recs) == 43
    assert {r.kind for r in recs} == {"theorem1", "buildup", "neighbour"}


def test_query_length94_first():
    hits = query(published_records(), length=94, family="W94_1", alpha=3588, beta=-69)
    assert [h.label for h in hits] == ["C94_1"]


def test_line_roundtrip():
    for rec in published_records():
        again = CodeRecord.from_line(rec.to_line())
        assert again == rec


def test_store_append_load(tmp_path):
    store = RecordStore(tmp_path / "codes.txt")
    recs = published_records()[:5]
    store.append(recs)
    store.append(recs[0])
    loaded = store.load()
    assert loaded == recs + [recs[0]]
    assert store.query(label=recs[1].label) == [recs[1]]


def test_store_validates(tmp_path):
    store = RecordStore(tmp_path / "codes.txt")
    store.append([fixture("C56_1"), fixture("C62_1")])
    assert len(store.load(validate=True)) == 2


def test_corrupted_digit_names_field():
    line = fixture("C78_1").to_line().replace("a=0100", "a=01x0")
    with pytest.raises(ParseError, match="'a'"):
        parse_records("# header\n" + line)
    with pytest.raises(ParseError, match="line 2"):
        parse_records("# header\n" + line)


@pytest.mark.parametrize(
    "bad",
    ["kind=theorem1 ring=F2 a=100 b=000 c=100", "kind=magic ring=F2 a=1 b=0 c=1 xi=0000", "junk"],
)
def test_malformed_lines(bad):
    with pytest.raises(ParseError):
        CodeRecord.from_line(bad)


def test_record_with_profile_reverifies():
    rec = fixture("C56_2")
    code = rec.reconstruct()
    rec2 = with_analysis(rec, code, low_weight_census(code, 12), None)
    again = CodeRecord.from_line(rec2.to_line())
    assert again.profile == rec2.profile
    assert verify_record(again)
    counts = dict(rec2.profile.counts)
    counts[10] += 2
    tampered = replace(rec2, profile=WeightProfile(56, 12, counts))
    assert not verify_record(CodeRecord.from_line(tampered.to_line()))


def test_binary_code_from_text_for_ring_file():
    rec = fixture("C92_1")
    mt = textfmt.MatrixText.from_matrix(theorem1_generator(rec.params))
    assert isinstance(mt.binary_code(), BinaryCode)
    assert mt.binary_code().n == 92
