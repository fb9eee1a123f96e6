import pytest

from tools.constructions import CONSTRUCTIONS, construct_bipartite_modular
from tools.ecg_format import parse, read_colouring, serialise, write_colouring
from tools.errors import FormatError


def test_complete_file_keeps_colouring_and_metadata(bg13, tmp_path):
    path = write_colouring(tmp_path / "bg.ecg", bg13.colouring, bg13.metadata())
    loaded = read_colouring(path)
    assert loaded.kind == "complete"
    assert loaded.colouring == bg13.colouring
    assert loaded.metadata["claimedBound"] == "11"
    assert path.read_text().splitlines()[3:5] == ["ECG 1", "13 2"]


def test_bipartite_file():
    report = construct_bipartite_modular(3, 6, 3)
    loaded = parse(serialise(report.colouring, report.metadata()))
    assert loaded.kind == "bipartite"
    assert loaded.colouring == report.colouring
    assert loaded.metadata["construction"] == "bipmod"


def test_edges_in_any_order():
    loaded = parse("ECG 1\n3 2\n1 2 2\n0 2 1\n\n0 1 1\n")
    assert loaded.colouring.colour(1, 2) == 2
    assert loaded.colouring.colour(2, 0) == 1


@pytest.mark.parametrize(
    "text, message",
    [
        ("ECG 1\n3 2\n0 1 1\n0 1 2\n1 2 1\n0 2 1\n", "line 4: duplicate edge 0 1"),
        ("ECG 1\n3 2\n0 1 1\n0 2 1\n", "1 edges missing, first 1 2"),
        ("ECG 1\n3 2\n1 0 1\n", "line 3: edge 1 0 needs"),
        ("ECG 1\n3 2\n0 1 3\n", "line 3: colour 3 outside 1..2"),
        ("ECG 1\n3 2\n0 1 1\n# late\n", "line 4: comments are only allowed before the header"),
        ("ECG 2\n3 2\n", "unsupported format version 2"),
        ("GRAPH 1\n3 2\n", "line 1: expected header"),
        ("# only: comments\n", "missing header line"),
        ("ECG 1\n", "missing size line"),
        ("ECG 1\n3\n", "line 2: expected 2 integers"),
        ("ECG 1\n3 2\n0 1 x\n", "line 3: non-integer field"),
        ("ECG 1\n1 2\n", "need at least 2 vertices"),
        ("ECB 1\n2 2 2\n0 2 1\n", "line 3: edge 0 2 needs"),
    ],
)
def test_malformed_files(text, message):
    with pytest.raises(FormatError) as caught:
        parse(text)
    assert message in str(caught.value)
    assert caught.value.exit_code == 1


@pytest.mark.parametrize(
    "kind, params",
    [("bg", (13, 2)), ("bg", (8, 3)), ("affine", (16, 3, 1)), ("hamzero", (12, 3, 3)), ("bipmod", (6, 6, 3))],
)
def test_canonical_text_is_stable(kind, params):
    report = CONSTRUCTIONS[kind](*params)
    text = serialise(report.colouring, report.metadata())
    loaded = parse(text)
    assert serialise(loaded.colouring, loaded.metadata) == text
