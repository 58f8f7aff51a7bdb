"""End-to-end checks of the rst command line interface."""

from __future__ import annotations

import json

import pytest

from treereconf import ReconfSequence, cli, load_instance
from treereconf.graph import load_graph

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
STAR0 = "1 2 3\n"  # all edges at vertex 0
STAR1 = "1 4 5\n"  # all edges at vertex 1
PATH = "1 4 6\n"  # the path 0-1-2-3
PATH2 = "2 4 5\n"  # the path 0-2-1-3
OROR_NCL = "0 OR\n1 OR\n0 1 2\n0 1 2\n0 1 2\n"
OROR_INI = "1->0\n1->0\n0->1\n"
OROR_TAR = "0->1\n0->1\n1->0\n"


@pytest.fixture()
def files(tmp_path):
    """Host, tree, and constraint-logic fixture files on disk."""
    paths = {}
    for name, text in (
        ("k4", K4_TEXT),
        ("star0", STAR0),
        ("star1", STAR1),
        ("path", PATH),
        ("path2", PATH2),
        ("oror.ncl", OROR_NCL),
        ("ini.orient", OROR_INI),
        ("tar.orient", OROR_TAR),
    ):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def _pair(files, t_from, t_to, kind, d):
    return [
        "--graph",
        files["k4"],
        "--from",
        files[t_from],
        "--to",
        files[t_to],
        "--constraint",
        kind,
        "--d",
        str(d),
    ]


def test_decide_exit_codes(files, capsys) -> None:
    cases = [
        # (t_from, t_to, kind, d, expected exit)
        ("star0", "star1", "diam-le", 2, 1),
        ("star0", "star0", "diam-le", 2, 0),
        ("star0", "path", "diam-le", 3, 0),
        ("star0", "star1", "max-deg-ge", 3, 1),
        ("star0", "star1", "max-deg-ge", 2, 0),
        ("star0", "path", "max-deg-le", 3, 0),
    ]
    for t_from, t_to, kind, d, expected in cases:
        code = cli.main(["decide", *_pair(files, t_from, t_to, kind, d)])
        out = capsys.readouterr().out.strip()
        assert code == expected, (t_from, t_to, kind, d, out)
        assert out == ("YES" if expected == 0 else "NO")


def test_decide_usage_errors(files, capsys) -> None:
    # No polynomial decision procedure exists for diam-ge.
    code = cli.main(["decide", *_pair(files, "star0", "star1", "diam-ge", 3)])
    assert code == 2
    assert "oracle" in capsys.readouterr().err
    # Both endpoints at max degree exactly d: outside the relaxed regime.
    code = cli.main(["decide", *_pair(files, "star0", "star1", "max-deg-le", 3)])
    assert code == 2
    assert "oracle decide" in capsys.readouterr().err
    # --relaxed only modifies max-deg-le.
    code = cli.main(
        ["decide", *_pair(files, "star0", "star0", "diam-le", 2), "--relaxed"]
    )
    assert code == 2
    capsys.readouterr()
    # Endpoint below the max-deg-ge bound is a precondition failure.
    code = cli.main(["decide", *_pair(files, "path", "path", "max-deg-ge", 3)])
    assert code == 2
    capsys.readouterr()


def test_decide_missing_file(files, capsys) -> None:
    argv = ["decide", *_pair(files, "star0", "star0", "diam-le", 2)]
    argv[4] = str(files["dir"] / "nope.txt")
    assert cli.main(argv) == 2
    capsys.readouterr()


def test_sequence_verify_round_trip(files, capsys) -> None:
    out = str(files["dir"] / "seq.json")
    code = cli.main(
        ["sequence", *_pair(files, "star0", "path", "diam-le", 3), "--out", out]
    )
    assert code == 0
    assert "flips" in capsys.readouterr().out
    code = cli.main(
        [
            "verify",
            out,
            "--graph",
            files["k4"],
            "--from",
            files["star0"],
            "--to",
            files["path"],
            "--constraint",
            "diam-le",
            "--d",
            "3",
        ]
    )
    assert code == 0
    assert capsys.readouterr().out.startswith("OK:")


def test_sequence_stdout_document(files, capsys) -> None:
    code = cli.main(["sequence", *_pair(files, "star0", "path", "max-deg-le", 3)])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["constraint"] == {"kind": "maxDegLe", "d": 3}
    assert doc["trees"][0]["remove"] is None
    assert sorted(doc["trees"][0]["edges"]) == [1, 2, 3]
    assert sorted(doc["trees"][-1]["edges"]) == [1, 4, 6]


def test_sequence_no_case(files, capsys) -> None:
    code = cli.main(["sequence", *_pair(files, "star0", "star1", "diam-le", 2)])
    assert code == 1
    assert capsys.readouterr().out.strip() == "NO"


def test_verify_detects_tampering(files, capsys) -> None:
    out = str(files["dir"] / "seq.json")
    assert (
        cli.main(
            ["sequence", *_pair(files, "star0", "path", "diam-le", 3), "--out", out]
        )
        == 0
    )
    capsys.readouterr()
    # Wrong claimed bound.
    code = cli.main(
        ["verify", out, "--graph", files["k4"], "--constraint", "diam-le", "--d", "2"]
    )
    assert code == 1
    assert capsys.readouterr().out.startswith("INVALID")
    # Wrong claimed endpoint.
    code = cli.main(["verify", out, "--graph", files["k4"], "--from", files["star1"]])
    assert code == 1
    assert capsys.readouterr().out.startswith("INVALID")
    # A violating document built by hand: the step drops the claimed bound.
    bad = dict(json.loads((files["dir"] / "seq.json").read_text()))
    bad["constraint"] = {"kind": "maxDegLe", "d": 2}
    bad_path = files["dir"] / "bad.json"
    bad_path.write_text(json.dumps(bad))
    code = cli.main(["verify", str(bad_path), "--graph", files["k4"]])
    assert code == 1
    capsys.readouterr()
    # Unparseable text is a usage error, not an INVALID verdict.
    garbled = files["dir"] / "garbled.json"
    garbled.write_text("not json")
    code = cli.main(["verify", str(garbled), "--graph", files["k4"]])
    assert code == 2
    capsys.readouterr()


def test_oracle_decide_and_sequence(files, capsys) -> None:
    code = cli.main(
        ["oracle", "decide", *_pair(files, "path", "path2", "diam-ge", 3)]
    )
    assert code == 0
    assert capsys.readouterr().out.strip() == "YES"
    code = cli.main(
        ["oracle", "decide", *_pair(files, "star0", "star1", "max-deg-ge", 3)]
    )
    assert code == 1
    assert capsys.readouterr().out.strip() == "NO"
    out = str(files["dir"] / "oseq.json")
    code = cli.main(
        [
            "oracle",
            "sequence",
            *_pair(files, "path", "path2", "diam-ge", 3),
            "--out",
            out,
        ]
    )
    assert code == 0
    capsys.readouterr()
    doc = json.loads((files["dir"] / "oseq.json").read_text())
    assert doc["constraint"]["kind"] == "diamGe"
    seq = ReconfSequence.from_json(
        load_graph(files["k4"]), (files["dir"] / "oseq.json").read_text()
    )
    assert len(seq.steps) == 3  # the frozen shortest distance for this pair


def test_oracle_cap(files, capsys) -> None:
    code = cli.main(
        [
            "oracle",
            "decide",
            *_pair(files, "path", "path2", "diam-ge", 3),
            "--cap",
            "4",
        ]
    )
    assert code == 2
    assert "--cap" in capsys.readouterr().err


def test_gen_ncl_bundle(files, capsys) -> None:
    out = str(files["dir"] / "bundle_ncl")
    code = cli.main(
        [
            "gen-ncl",
            "--graph",
            files["oror.ncl"],
            "--from",
            files["ini.orient"],
            "--to",
            files["tar.orient"],
            "--out",
            out,
        ]
    )
    assert code == 0
    assert "maxDegLe" in capsys.readouterr().out
    inst = load_instance(out)
    assert inst.kind == "maxDegLe" and inst.d == 3
    assert inst.g.n == 31 and inst.g.m == 37
    assert inst.t_ini.max_degree() <= 3
    # The compiled instance is deliberately tight, outside the relaxed
    # regime the polynomial command serves.
    code = cli.main(
        [
            "decide",
            "--graph",
            str(files["dir"] / "bundle_ncl" / "graph.txt"),
            "--from",
            str(files["dir"] / "bundle_ncl" / "t_ini.txt"),
            "--to",
            str(files["dir"] / "bundle_ncl" / "t_tar.txt"),
            "--constraint",
            "max-deg-le",
            "--d",
            "3",
        ]
    )
    assert code == 2
    capsys.readouterr()


def test_gen_ham_bundle(files, capsys) -> None:
    out = str(files["dir"] / "bundle_ham")
    code = cli.main(
        [
            "gen-ham",
            "--graph",
            files["k4"],
            "--from",
            "0",
            "--to",
            "3",
            "--out",
            out,
        ]
    )
    assert code == 0
    assert "diamGe" in capsys.readouterr().out
    inst = load_instance(out)
    assert inst.kind == "diamGe" and inst.d == 29
    assert inst.g.n == 32


def test_auxgraph_jobs_deterministic(files, capsys) -> None:
    texts = []
    for jobs in ("1", "2"):
        dot = str(files["dir"] / f"aux{jobs}.dot")
        code = cli.main(
            [
                "auxgraph",
                "--graph",
                files["k4"],
                "--constraint",
                "diam-le",
                "--d",
                "3",
                "--dot",
                dot,
                "--jobs",
                jobs,
            ]
        )
        assert code == 0
        capsys.readouterr()
        texts.append((files["dir"] / f"aux{jobs}.dot").read_text())
    assert texts[0] == texts[1]
    assert "label" in texts[0]  # witness edge ids annotate the aux edges


def test_auxgraph_degree_stdout(files, capsys) -> None:
    code = cli.main(
        ["auxgraph", "--graph", files["k4"], "--constraint", "max-deg-ge", "--d", "2"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("graph")
    assert out.count(" -- ") == 6  # every vertex pair of the complete host
