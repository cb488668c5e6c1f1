"""Acceptance criteria 1-8.

Each criterion prints one ``PASS``/``FAIL`` line (collected into the pytest
terminal summary, or printed directly when run as a script:
``python -m tests.test_acceptance``). Findings from the oracle sweep are
written to ``acceptance_findings.jsonl`` next to the tests directory.
"""

import collections
import io
import itertools
import json
import pathlib

import pytest

from strongadf import adf as A
from strongadf import af as AF
from strongadf import oracle, strong
from strongadf.cli import main
from strongadf.interpretation import F, T, U, Interpretation, all_interpretations, parse_interpretation, trivial

from . import naive

DATA = pathlib.Path(__file__).parent / "data"
FINDINGS_FILE = pathlib.Path(__file__).parent.parent / "acceptance_findings.jsonl"
SWEEP_SEED, SWEEP_COUNT, SWEEP_ARGS = 1, 200, 5

RESULTS: dict[int, str] = {}


def record(number, title, failures):
    line = f"criterion {number} {'PASS' if not failures else 'FAIL'}: {title}"
    if failures:
        line += " -- " + "; ".join(failures[:5])
    RESULTS[number] = line
    print(line)
    assert not failures, line


def load(name):
    return A.load_adf((DATA / name).read_text())


def cli(*argv):
    out = io.StringIO()
    return main(list(argv), out=out), out.getvalue()


def expect(failures, cond, message):
    if not cond:
        failures.append(message)


@pytest.fixture(scope="module")
def sweep():
    return oracle.cross_validate(SWEEP_SEED, SWEEP_COUNT, max_args=SWEEP_ARGS)


def test_criterion_1_sadm_lattice():
    fails = []
    expected = {"{}", "{a}", "{¬d}", "{a, ¬d}", "{¬c, ¬d}", "{a, ¬c, ¬d}", "{a, b, ¬c, ¬d}"}
    code, text = cli("solve", str(DATA / "running.adf"), "--sem", "sadm", "--format", "json")
    got = [i["set"] for i in json.loads(text)["interpretations"]]
    expect(fails, code == 0, f"solve exit {code}")
    expect(fails, set(got) == expected and len(got) == 7, f"sadm set {got}")
    code, text = cli("lattice", str(DATA / "running.adf"), "--format", "json")
    lat = json.loads(text)
    nodes = lat["nodes"]
    expect(fails, all(x == "u" for x in nodes[lat["bottom"]].values()), "bottom is not trivial")
    expect(fails, nodes[lat["top"]] == {"a": "t", "b": "t", "c": "f", "d": "f"}, "top differs")
    # cover edges recomputed here from the pointwise order
    running = load("running.adf")
    vs = [Interpretation.from_mapping(running.arguments, {k: parse_value(x) for k, x in n.items()}) for n in nodes]
    covers = {(i, j) for i, j in itertools.permutations(range(len(vs)), 2)
              if vs[i] < vs[j] and not any(vs[i] < z < vs[j] for z in vs)}
    expect(fails, {tuple(e) for e in lat["cover_edges"]} == covers and len(covers) == 8,
           f"cover edges {lat['cover_edges']}")
    record(1, "sadm node set of the running ADF, bottom, top and 8 cover edges", fails)


def parse_value(x):
    return {"t": T, "f": F, "u": U}[x]


def test_criterion_2_classical_semantics():
    fails = []
    running = load("running.adf")
    iv = lambda lit: parse_interpretation(lit, running.arguments)
    g = A.grounded(running)
    expect(fails, g == iv("a=t,b=t,c=f,d=f"), f"grounded {g.to_set_notation()}")
    expect(fails, A.check(running, iv("b=t"), "cf"), "{b} not cf")
    expect(fails, not A.check(running, iv("b=t"), "adm"), "{b} admissible")
    expect(fails, A.check(running, iv("a=t,c=f,d=f"), "adm"), "{a,¬c,¬d} not admissible")
    expect(fails, A.check(running, g, "prf"), "grounded not preferred")
    # brute force: admissible interpretations with no strictly larger admissible one
    adm = [v for v in all_interpretations(running.arguments) if naive.admissible(running, v)]
    maximal = [v for v in adm if not any(v < w for w in adm)]
    expect(fails, maximal == [g], f"preferred by brute force {[v.to_set_notation() for v in maximal]}")
    expect(fails, A.enumerate_interpretations(running, "prf") == [g], "prf enumeration")
    record(2, "grounded, cf/adm verdicts and unique preferred of the running ADF", fails)


def test_criterion_3_least_witness():
    fails = []
    running = load("running.adf")
    code, text = cli("witness", str(DATA / "running.adf"), "--interp", "b=t,c=f,d=f", "--arg", "c", "--format", "json")
    data = json.loads(text)
    expect(fails, code == 0, f"witness exit {code}")
    expect(fails, data.get("least_set") == ["d"], f"least set {data.get('least_set')}")
    expect(fails, data.get("level") == 2, f"level {data.get('level')}")
    v = parse_interpretation("b=t,c=f,d=f", running.arguments)
    ok, _ = strong.strongly_acceptable(running, v, "c", {"b"})
    expect(fails, not ok, "c strongly deniable with S={b}")
    record(3, "least set {d} with level 2; S={b} rejected", fails)


def test_criterion_4_redundant_link():
    fails = []
    redundant = load("redundant.adf")
    v = parse_interpretation("a=t", redundant.arguments)
    expect(fails, strong.is_strongly_admissible(redundant, v), "{a} not sadm")
    w = strong.least_witness(redundant, v, "a")
    expect(fails, w.sorted_ancestors() == [], f"witness {w.sorted_ancestors()}")
    expect(fails, strong.max_level(redundant, v, w) == 1, "level is not 1")
    expect(fails, A.classify_link(redundant, ("b", "a")) is A.LinkType.REDUNDANT, "link (b,a) not redundant")
    record(4, "{a} sadm in the redundant-link ADF with S={} and level 1; (b,a) redundant", fails)


def test_criterion_5_counterexample():
    fails = []
    counter = load("counter.adf")
    iv = lambda lit: parse_interpretation(lit, counter.arguments)
    expect(fails, A.check(counter, iv("a=f,b=t"), "adm"), "{¬a,b} not admissible")
    expect(fails, not A.check(counter, iv("a=f,b=t"), "sadm"), "{¬a,b} sadm")
    expect(fails, A.check(counter, iv("b=t"), "cf"), "{b} not cf")
    expect(fails, not A.check(counter, iv("b=t"), "adm"), "{b} admissible")
    found = strong.enumerate_strongly_admissible(counter)
    expect(fails, found == [trivial(counter.arguments)], f"sadm {[v.to_set_notation() for v in found]}")
    expect(fails, A.grounded(counter) == trivial(counter.arguments), "grounded not trivial")
    record(5, "admissible but not strongly admissible counterexample", fails)


def test_criterion_6_af_side():
    fails = []
    chain = AF.load_af((DATA / "chain.af").read_text())
    exts = AF.enumerate_strongly_admissible_ext(chain)
    expect(fails, set(exts) == {frozenset(), frozenset("a"), frozenset("ac")} and len(exts) == 3,
           f"extensions {[sorted(e) for e in exts]}")
    expect(fails, AF.grounded_extension(chain) == frozenset("ac"), "grounded extension")
    expect(fails, not AF.is_strongly_admissible_ext(chain, {"c"}), "{c} accepted")
    g = A.grounded(AF.af_to_adf(chain))
    expect(fails, (g["a"], g["b"], g["c"]) == (T, F, T), f"af2adf grounded {g.to_set_notation()}")
    record(6, "AF strongly admissible extensions, grounded extension and translation", fails)


@pytest.mark.slow
def test_criterion_7_theorem_suite(sweep):
    fails = []
    samples = oracle.samples(SWEEP_SEED, SWEEP_COUNT, SWEEP_ARGS)
    expect(fails, len(samples) >= 200, f"only {len(samples)} samples")
    expect(fails, max(s.size for s in samples) <= 5, "sample over 5 arguments")
    hard = collections.Counter(d.operation for d in sweep if not d.finding and d.operation != "brute_force_sadm")
    for op in oracle.THEOREM_CHECKS:
        if hard[op]:
            fails.append(f"{op}: {hard[op]} violations")
    record(7, f"theorem suite over {len(samples)} seeded ADFs (3^n sweep each)", fails)


@pytest.mark.slow
def test_criterion_8_oracle_equivalence(sweep):
    fails = []
    bf = [d for d in sweep if d.operation == "brute_force_sadm"]
    if bf:
        fails.append(f"{len(bf)} brute-force disagreements, first: {bf[0].to_json()}")
    findings = [d for d in sweep if d.finding]
    with FINDINGS_FILE.open("w", encoding="utf-8") as fh:
        for d in findings:
            fh.write(d.to_json() + "\n")
    counts = collections.Counter(d.operation for d in findings)
    summary = ", ".join(f"{op}={counts[op]}" for op in oracle.FINDINGS)
    expect(fails, FINDINGS_FILE.exists(), "findings report not written")
    record(8, f"brute force agrees on every interpretation; findings report: {summary} ({FINDINGS_FILE.name})", fails)


if __name__ == "__main__":
    import sys

    raise SystemExit(pytest.main([__file__, "-q", *sys.argv[1:]]))
