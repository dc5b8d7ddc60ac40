import pytest

from sobrify.cli import main, parse_window
from sobrify.generated import Window
from sobrify.report import CONCLUSION

CHAIN = "elem a\nelem b\nelem c\ncover a b\ncover b c\n"
ANTICHAIN = "elem a\nelem b\nelem c\n"
DIAMOND = "elem b\nelem m1\nelem m2\nelem t\ncover b m1\ncover b m2\ncover m1 t\ncover m2 t\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in [("chain", CHAIN), ("anti", ANTICHAIN), ("diamond", DIAMOND),
                       ("chain2", CHAIN.replace("a", "x")), ("bad", "vertex a\n")]:
        path = tmp_path / f"{name}.txt"
        path.write_text(text)
        out[name] = str(path)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_gamma(files, capsys):
    code, out = run(capsys, "gamma", files["chain"])
    assert code == 0
    assert out.out.startswith("4 closed sets; 3 irreducible (principal)")
    assert "8 closed sets" in run(capsys, "gamma", files["anti"])[1].out
    assert "6 closed sets" in run(capsys, "gamma", files["diamond"])[1].out


def test_irr_and_dominated(files, capsys):
    assert "{b,m1} = down(m1)" in run(capsys, "irr", files["diamond"])[1].out
    assert "dominated: yes" in run(capsys, "dominated", files["diamond"])[1].out


def test_iso(files, capsys):
    code, out = run(capsys, "iso", files["chain"], files["chain2"])
    assert code == 0 and "phi/psi transport: verified" in out.out
    code, out = run(capsys, "iso", files["chain"], files["anti"])
    assert code == 1 and "posets isomorphic: no" in out.out


def test_parse_error(files, capsys):
    code, out = run(capsys, "gamma", files["bad"])
    assert code == 2 and "error" in out.err


def test_verify(capsys):
    code, out = run(capsys, "verify", "h-order", "--window", "2,2,2")
    assert code == 0 and "status: PASS" in out.out


def test_verify_sobrification_lists_certificates(capsys):
    code, out = run(capsys, "verify", "sobrification", "--window", "2,2,2")
    assert code == 0
    for ref in ["non-dominatedness of H", "Johnstone's S is dominated",
                "non-idempotence of order sobrification",
                "Scott topologies of H and its order sobrification are isomorphic"]:
        assert f"paper_ref: {ref}" in out.out


def test_report_small(capsys):
    code, out = run(capsys, "report", "--window", "2,2,2")
    assert code == 0 and out.out.rstrip().endswith(CONCLUSION)


def test_dot_to_file(tmp_path, capsys):
    target = tmp_path / "t.dot"
    code, _ = run(capsys, "dot", "T", "--window", "3,2", "-o", str(target))
    assert code == 0 and target.read_text().startswith('digraph "T"')


def test_dot_poset_file(files, capsys):
    code, out = run(capsys, "dot", files["diamond"])
    assert code == 0 and '"b" -> "m1";' in out.out


def test_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "bogus"])


def test_window_parsing():
    assert parse_window("3,3", "S") == Window(3, 3)
    assert parse_window("3,2", "T") == Window(1, 3, 2)
    assert parse_window("4,4,3") == Window(4, 4, 3)
