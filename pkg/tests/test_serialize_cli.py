import json
from fractions import Fraction as F

import pytest

from bsched import (
    Instance,
    PartitionInstance,
    ValidationError,
    emit_instance,
    emit_partition,
    emit_trace,
    evaluate_greedy,
    gen_partition,
    gen_random,
    parse_instance,
    parse_partition,
    parse_rational,
    parse_trace,
)
from bsched.cli import run_cli


def test_parse_rational():
    assert parse_rational("3/5") == F(3, 5)
    assert parse_rational("7") == F(7)
    assert parse_rational("-2/4") == F(-1, 2)
    for bad in ("1/0", "a", "1.5", "1/-2", ""):
        with pytest.raises(ValidationError):
            parse_rational(bad)


def test_instance_round_trip():
    inst = Instance(b=2, jobs=(F(3, 5), F(1, 2), F(7, 10)))
    assert parse_instance(emit_instance(inst)) == inst


def test_parse_instance_example():
    text = json.dumps({"b": 2, "window": "1", "jobs": ["3/5", "1/2", "7/10"]})
    inst = parse_instance(text)
    assert inst == Instance(b=2, jobs=(F(3, 5), F(1, 2), F(7, 10)), window=F(1))


def test_parse_instance_reduction_image_form():
    text = json.dumps(
        {"b": 2, "window": "5", "jobs": ["1", "2", "3", "4", "0", "0", "5"]}
    )
    inst = parse_instance(text)
    assert inst.window == F(5)
    assert inst.jobs[-1] == F(5)


def test_parse_instance_field_errors():
    with pytest.raises(ValidationError) as err:
        parse_instance(json.dumps({"b": 1, "window": "1", "jobs": ["1"]}))
    assert err.value.field == "b"
    with pytest.raises(ValidationError) as err:
        parse_instance(json.dumps({"b": 2, "window": "1", "jobs": ["1", "-1/2"]}))
    assert err.value.field == "jobs[1]"
    with pytest.raises(ValidationError):
        parse_instance("{not json")
    with pytest.raises(ValidationError):
        parse_instance(json.dumps({"b": 2, "jobs": ["1"]}))  # missing window
    with pytest.raises(ValidationError):
        parse_instance(json.dumps({"b": 2, "window": "1", "jobs": ["1"], "x": 1}))


def test_partition_round_trip():
    part = PartitionInstance((4, 1, 2, 3))
    assert parse_partition(emit_partition(part)) == part
    with pytest.raises(ValidationError):
        parse_partition(json.dumps({"values": [1, "2"]}))


def test_trace_round_trip():
    inst = Instance(b=2, jobs=(F(3, 5), F(1, 2), F(7, 10)))
    trace = evaluate_greedy(inst, (2, 0, 1))
    assert parse_trace(emit_trace(trace)) == trace
    payload = json.loads(emit_trace(trace))
    assert payload["order"] == [3, 1, 2]  # files are 1-based


def test_gen_random_is_deterministic_and_in_range():
    a = gen_random(5, 2, seed=42)
    b = gen_random(5, 2, seed=42)
    assert a == b
    assert a.n == 5
    assert all(0 <= s <= 1 for s in a.jobs)
    assert gen_random(6, 2, seed=1, zero_fraction=1.0).jobs == (F(0),) * 6
    with pytest.raises(ValidationError):
        gen_random(0, 2, seed=1)
    with pytest.raises(ValidationError):
        gen_random(3, 2, seed=1, zero_fraction=1.5)


def test_gen_partition_is_deterministic_with_even_total():
    a = gen_partition(2, 9, seed=7)
    assert a == gen_partition(2, 9, seed=7)
    assert len(a.values) == 4
    assert a.total % 2 == 0
    assert gen_partition(3, 1, seed=0).values == (1,) * 6


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def instance_file(tmp_path):
    return _write(
        tmp_path, "inst.json", {"b": 2, "window": "1", "jobs": ["3/10", "1", "1/2"]}
    )


@pytest.fixture
def partition_file(tmp_path):
    return _write(tmp_path, "part.json", {"values": [1, 2, 3, 4]})


def test_cli_eval(instance_file, capsys):
    assert run_cli(["eval", instance_file, "2,3,1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["feasible"] is True
    assert payload["trace"]["order"] == [2, 3, 1]


def test_cli_eval_rejects_bad_permutation(instance_file, capsys):
    assert run_cli(["eval", instance_file, "1,1,2"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert "error" in err and err["field"] == "order"


def test_cli_opt_and_limit(instance_file, capsys):
    assert run_cli(["opt", instance_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["optimum"] == "9/5"
    assert run_cli(["opt", instance_file, "--limit", "2"]) == 1
    assert "error" in json.loads(capsys.readouterr().err)


def test_cli_lpt(instance_file, capsys):
    assert run_cli(["lpt", instance_file]) == 0
    assert json.loads(capsys.readouterr().out)["makespan"] == "23/10"


def test_cli_ptas(instance_file, capsys):
    assert run_cli(["ptas", instance_file, "--epsilon", "1/2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert parse_rational(payload["fstar"]) >= parse_rational(payload["makespan"])


def test_cli_reduce_and_decide(partition_file, capsys):
    assert run_cli(["reduce", partition_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["threshold"] == "20"
    assert payload["instance"]["jobs"] == ["1", "2", "3", "4", "0", "0", "5"]

    assert run_cli(["decide", partition_file]) == 0
    assert capsys.readouterr().out == "YES\n"


def test_cli_decide_no(tmp_path, capsys):
    path = _write(tmp_path, "no.json", {"values": [1, 1, 1, 3]})
    assert run_cli(["decide", path]) == 0
    assert capsys.readouterr().out == "NO\n"


def test_cli_gen_round_trips(capsys):
    assert run_cli(["gen", "--n", "4", "--b", "2", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert parse_instance(out) == gen_random(4, 2, seed=5)


def test_cli_genpart_round_trips(capsys):
    assert run_cli(["genpart", "--m", "2", "--max-value", "6", "--seed", "5"]) == 0
    assert parse_partition(capsys.readouterr().out) == gen_partition(2, 6, seed=5)


def test_cli_usage_errors(capsys):
    assert run_cli([]) == 2
    capsys.readouterr()
    assert run_cli(["gen", "--n", "x", "--b", "2"]) == 2
    assert "error" in json.loads(capsys.readouterr().err)


def test_cli_missing_file(capsys):
    assert run_cli(["opt", "/nonexistent/inst.json"]) == 1
    assert "error" in json.loads(capsys.readouterr().err)


def test_cli_bench(tmp_path, capsys):
    suite = _write(
        tmp_path,
        "suite.json",
        {
            "epsilons": ["1/2"],
            "instances": [
                {"id": "b", "b": 2, "window": "1", "jobs": ["3/10", "1", "1/2"]},
                {"id": "a", "b": 2, "window": "1", "jobs": ["1/2", "1/2", "1/2"]},
            ],
        },
    )
    assert run_cli(["bench", "--suite", suite]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].startswith("id,n,b,opt,opt_dec,lpt")
    assert [line.split(",")[0] for line in lines[1:]] == ["a", "b"]  # ordered by id
    assert "opt_seconds" not in out  # wall times stay out of the CSV
    tsv = (tmp_path / "suite.tsv").read_text()
    assert "opt_seconds" in tsv.splitlines()[0]
