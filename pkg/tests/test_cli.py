import subprocess
import sys

import pytest

from hyperchroma.cli import main, verify_paper
from hyperchroma.formats import emit_hg, parse_col, parse_hg
from hyperchroma.generators import field_plane, h3_prime_literal, truncated_plane


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def h3p_file(tmp_path):
    p = tmp_path / "h3p.hg"
    p.write_text(emit_hg(h3_prime_literal()))
    return str(p)


def test_generate_twisted(capsys):
    code, out, _ = run(capsys, "generate", "twisted", "3")
    assert code == 0 and parse_hg(out).m == 10


def test_generate_plane_6_fails(capsys):
    code, _, err = run(capsys, "generate", "plane", "6")
    assert code == 2 and "not a prime power" in err


def test_generate_random_is_deterministic(capsys):
    args = ("generate", "random", "--n", "9", "--k", "3", "--m", "8", "--seed", "1")
    first = run(capsys, *args)
    assert first[0] == 0 and run(capsys, *args) == first
    assert parse_hg(first[1]).m <= 8


def test_generate_random_needs_sizes(capsys):
    assert run(capsys, "generate", "random", "--n", "9")[0] == 2


def test_color_exact(capsys, h3p_file, tmp_path):
    out_col = tmp_path / "h.col"
    code, out, _ = run(capsys, "color", h3p_file, "-o", str(out_col))
    assert code == 0 and out.strip() == "q=5 valid=true"
    assert parse_col(out_col.read_text()).num_colors == 5
    code, out, _ = run(capsys, "verify", h3p_file, str(out_col))
    assert code == 0 and out.startswith("valid=true")


def test_color_affine(capsys, tmp_path):
    p = tmp_path / "a4.hg"
    p.write_text(emit_hg(field_plane(4)[0]))
    code, out, _ = run(capsys, "color", str(p), "--method", "affine")
    assert code == 0 and out.strip() == "q=5 valid=true"


def test_color_hk_non_member(capsys, tmp_path):
    p = tmp_path / "a3.hg"
    p.write_text(emit_hg(field_plane(3)[0]))
    code, _, err = run(capsys, "color", str(p), "--method", "hk")
    assert code == 2 and "not a class member" in err


def test_color_twisted_lambda(capsys, tmp_path):
    p = tmp_path / "t.hg"
    run(capsys, "generate", "twisted", "4", "-o", str(p))
    for lam in (1, 2, 3):
        assert run(capsys, "color", str(p), "--method", "twisted", "--lambda", str(lam))[1].strip() == "q=7 valid=true"
    assert run(capsys, "color", str(p), "--method", "twisted", "--lambda", "0")[0] == 2


def test_verify_rejects_bad_colouring(capsys, h3p_file, tmp_path):
    c = tmp_path / "bad.col"
    c.write_text("10 1\n" + "".join(f"{i} 0\n" for i in range(10)))
    code, out, _ = run(capsys, "verify", h3p_file, str(c))
    assert code == 1 and out.startswith("valid=false")


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.hg"
    p.write_text("3 2\n0 1\n0 1\n")
    code, _, err = run(capsys, "color", str(p))
    assert code == 2 and "line 3" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "stats", str(tmp_path / "nope.hg"))[0] == 2


def test_bad_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_aut_iso(capsys, h3p_file, tmp_path):
    code, out, _ = run(capsys, "aut", h3p_file)
    assert code == 0 and out.splitlines()[0] == "order=12"
    t = tmp_path / "t3.hg"
    run(capsys, "generate", "twisted", "3", "-o", str(t))
    assert run(capsys, "iso", h3p_file, str(t))[1].startswith("isomorphic=true")
    a = tmp_path / "a3.hg"
    a.write_text(emit_hg(truncated_plane(3)[0]))
    assert run(capsys, "iso", h3p_file, str(a))[1].strip() == "isomorphic=false"


def test_maximal_and_critical(capsys, h3p_file, tmp_path):
    assert run(capsys, "maximal", h3p_file)[1].strip() == "maximal=true"
    a = tmp_path / "a3.hg"
    a.write_text(emit_hg(truncated_plane(3)[0]))
    out = run(capsys, "maximal", str(a))[1].strip()
    assert out in ("maximal=false extension=3 4 5", "maximal=false extension=6 7 8")
    code, out, _ = run(capsys, "critical", str(a))
    assert code == 0 and out.splitlines() == ["q=4 critical=1", f"{truncated_plane(3)[0].index((0, 1, 2))} 0 1 2"]


def test_stats(capsys, h3p_file):
    code, out, _ = run(capsys, "stats", h3p_file)
    lines = dict(line.split("=", 1) for line in out.splitlines() if "=" in line and " " not in line)
    assert code == 0 and lines["max_degree"] == "4" and lines["edge_count"] == "10" and lines["linear"] == "true"
    code, out, _ = run(capsys, "stats", h3p_file, "--dot")
    assert out.startswith("graph two_section {") and out.count("--") == 30


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "3", "--out-dir", str(tmp_path))
    assert code == 0 and out.startswith("2 classes")
    rows = (tmp_path / "index.tsv").read_text().splitlines()[1:]
    assert sorted(r.split("\t")[2] for r in rows) == ["4", "5"]
    assert sorted(r.split("\t")[3] for r in rows) == ["12", "36"]
    assert run(capsys, "enumerate", "4")[0] == 2
    assert run(capsys, "enumerate", "4", "--allow-large", "--budget", "0.3", "--out-dir", str(tmp_path))[0] == 1


def test_byte_identical_reruns(capsys, h3p_file, tmp_path):
    for argv in (("color", h3p_file), ("aut", h3p_file), ("stats", h3p_file), ("generate", "twisted", "5"),
                 ("critical", h3p_file), ("verify-paper", "--kmax", "3")):
        assert run(capsys, *argv) == run(capsys, *argv)
    run(capsys, "enumerate", "3", "--out-dir", str(tmp_path / "a"))
    run(capsys, "enumerate", "3", "--out-dir", str(tmp_path / "b"))
    for f in ("index.tsv", "H3_0.hg", "H3_1.hg"):
        assert (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes()


def test_verify_paper_rows():
    rows = verify_paper(2)
    names = {r.claim: r for r in rows}
    assert names["|Aut(truncated plane k=2)|"].computed == 4
    assert all(r.status == "pass" for r in rows)
    rows = verify_paper(6)
    assert rows[-1].claim == "order 6" and rows[-1].status == "skipped: not prime power"


def test_verify_paper_known_failures():
    # the three rows that disagree with the published statements are recorded in the notes
    failed = sorted(r.claim for r in verify_paper(4) if r.failed)
    assert failed == [
        "critical edges of twisted plane k=3",
        "critical edges of twisted plane k=4",
        "listed permutations are automorphisms",
    ]


def test_entry_point_module():
    res = subprocess.run([sys.executable, "-m", "hyperchroma.cli", "generate", "h3prime"], capture_output=True, text=True)
    assert res.returncode == 0 and parse_hg(res.stdout) == h3_prime_literal()
