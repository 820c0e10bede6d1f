import json

import pytest

import qfwitt

SIX_FIELD = "Q(sqrt(-7))"
SIX_FORM = ["-3-9*t", "-1", "-2-6*t", "1-1*t", "-6+4*t", "-3+2*t", "4-4*t"]


def test_worked_decomposition():
    r = qfwitt.decompose(SIX_FIELD, SIX_FORM)
    assert r["adim"] == 3
    assert r["witt_index"] == 2
    qa = r["anisotropic_part"]
    assert len(qa) == 3
    assert qfwitt.adim(SIX_FIELD, qa) == 3
    rebuilt = qa + ["1", "-1"] * 2
    assert qfwitt.equivalent(SIX_FIELD, SIX_FORM, rebuilt)


def test_trace_keys():
    r = qfwitt.decompose(SIX_FIELD, SIX_FORM, trace=True)
    assert {"alphas", "padding"} <= set(r["trace"])


def test_small_invariants():
    assert qfwitt.adim("Q", ["1", "-1"]) == 0
    assert qfwitt.isotropic("Q", ["1", "1", "-1"])
    assert not qfwitt.isotropic("Q", ["1", "1", "1"])
    assert qfwitt.hilbert("Q", "-1", "-1", "2") == -1
    assert qfwitt.hilbert("Q", "-1", "-1", "real:0") == -1
    assert qfwitt.hilbert("Q", "-1", "-1", "3") == 1
    assert qfwitt.local_adim("Q", ["1", "1", "1", "1"], "2") == 4
    assert qfwitt.adim("Q(sqrt(-1))", ["1", "1", "1"]) == 1


def test_certificate_schema():
    c = qfwitt.certificate("Q(sqrt(2))", ["1", "t", "-3"])
    assert set(c) >= {"dim", "disc", "signatures", "hasse", "adim", "witt_index"}
    assert c["dim"] == 3
    assert len(c["signatures"]) == 2


def test_singular_group_dimension():
    # Q(sqrt(-5)) with the dyadic prime: one complex place, one S-prime, trivial 2-part of Cl_S.
    assert len(qfwitt.singular_group("Q(sqrt(-5))")) == 2


def test_element_round_trip():
    for x in ["(-27-19*t)/2", "-3-9*t", "5", "-t"]:
        s = qfwitt.normalize("Q(sqrt(-7))", x)
        assert qfwitt.normalize("Q(sqrt(-7))", s) == s


@pytest.mark.parametrize(
    "form, kind",
    [(["1", "0"], "DegenerateForm"), (["1", "2+"], "Parse")],
)
def test_errors(form, kind):
    with pytest.raises(qfwitt.QfwittError) as info:
        qfwitt.adim("Q", form)
    assert qfwitt.error_kind(info.value) == kind


def test_invalid_field():
    with pytest.raises(qfwitt.QfwittError) as info:
        qfwitt.adim("Q(sqrt(9))", ["1"])
    assert qfwitt.error_kind(info.value) == "InvalidField"


def test_run_matches_cli_format():
    text = "field Q(sqrt(-7))\nform " + ", ".join(SIX_FORM) + "\n"
    out, code = qfwitt.run("decompose", text, verify=True)
    assert code == 0
    assert "adim: 3, witt_index: 2" in out
    assert "verified: yes" in out
    out, code = qfwitt.run("decompose", text, json=True)
    assert code == 0
    assert json.loads(out)["witt_index"] == 2
    _, code = qfwitt.run("decompose", "field Q\nform 1, 0\n")
    assert code == 1
    _, code = qfwitt.run("decompose", "gram 1,1;1,1\n")
    assert code == 1
