"""Certificate serialization round-trips and independent re-checking."""

import pytest

from vasskit import (
    Configuration,
    ParseError,
    PlaneVector,
    Verdict,
    WitnessResult,
    ZERO,
    cut_by_vector,
    slps_of,
)
from vasskit.certificates import (
    parse_result,
    parse_shortening,
    parse_verdict,
    serialize_result,
    serialize_shortening,
    serialize_verdict,
    verify_certificate_file,
)

V = PlaneVector
UP = slps_of([ZERO, ZERO], [V(0, 1)])
UP_TEXT = "slps\nseg 0 0\ncyc 0 1\nseg 0 0\n"


def _member():
    return cut_by_vector(UP, (3,), Configuration(6, 6), 1, V(0, 1)).members[1]


def test_shortening_round_trip():
    line = serialize_shortening(_member(), "scheme.vas")
    assert line == (
        "shortening: scheme=scheme.vas original=3 reduced=2 delta=0,1 source=6,6"
    )
    cert = parse_shortening(line.split(": ", 1)[1])
    assert cert.original == (3,) and cert.reduced == (2,)
    assert cert.delta == V(0, 1) and (cert.source.x, cert.source.y) == (6, 6)


def test_verdict_round_trip():
    verdict = Verdict(
        kind="Reachable", cap=10, witness=(V(-1, 1), V(-1, 1)), states=("a", "a", "a")
    )
    line = serialize_verdict(verdict)
    again = parse_verdict(line.split(": ", 1)[1])
    assert again == verdict
    negative = Verdict(kind="UnreachableWithinCap", cap=5)
    assert parse_verdict(serialize_verdict(negative).split(": ", 1)[1]) == negative


def test_result_round_trip():
    result = WitnessResult(reachable=True, member=0, exponents=(3,), max_visited_norm=9)
    line = serialize_result(result)
    assert parse_result(line.split(": ", 1)[1]) == result
    assert parse_result("reachable=false") == WitnessResult(reachable=False)
    with pytest.raises(ParseError):
        parse_result("reachable=maybe")


def test_verify_certificate_file_valid(tmp_path):
    (tmp_path / "scheme.vas").write_text(UP_TEXT)
    cert = tmp_path / "good.cert"
    cert.write_text(serialize_shortening(_member(), "scheme.vas") + "\n")
    assert verify_certificate_file(str(cert)) == []


def test_verify_certificate_file_tampered_delta(tmp_path):
    (tmp_path / "scheme.vas").write_text(UP_TEXT)
    line = serialize_shortening(_member(), "scheme.vas").replace("delta=0,1", "delta=0,2")
    cert = tmp_path / "bad.cert"
    cert.write_text(line + "\n")
    violations = verify_certificate_file(str(cert))
    assert len(violations) == 1 and "delta" in violations[0] or violations


def test_verify_verdict_certificate(tmp_path):
    (tmp_path / "loop.vas").write_text(
        "vass\nstates a\ninit a\nfinal a\nedge a a -1 1\nquery 2 0 -> 0 2\n"
    )
    cert = tmp_path / "verdict.cert"
    cert.write_text(
        "instance: loop.vas\n"
        "verdict: kind=Reachable cap=10 length=2 word=-1,1;-1,1 states=a,a,a\n"
    )
    assert verify_certificate_file(str(cert)) == []
    cert.write_text(
        "instance: loop.vas\n"
        "verdict: kind=UnreachableWithinCap cap=10\n"
    )
    assert verify_certificate_file(str(cert)) != []  # target actually reachable


def test_verify_result_certificate(tmp_path):
    (tmp_path / "up.vas").write_text(UP_TEXT + "query 0 0 -> 0 3\n")
    cert = tmp_path / "result.cert"
    cert.write_text(
        "instance: up.vas\nresult: reachable=true member=0 exponents=3 maxnorm=3\n"
    )
    assert verify_certificate_file(str(cert)) == []
    cert.write_text("instance: up.vas\nresult: reachable=false\n")
    assert verify_certificate_file(str(cert)) != []


def test_verify_unknown_line(tmp_path):
    cert = tmp_path / "odd.cert"
    cert.write_text("mystery: a=b\n")
    with pytest.raises(ParseError):
        verify_certificate_file(str(cert))
