import pathlib

from gazemenu.cli import main

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN_TRACE = DATA / "music-quick-play-seed42.trace.ndjson"
GOLDEN_EVENTS = DATA / "music-quick-play-seed42.events.ndjson"


def test_scenario_writes_byte_stable_trace(tmp_path):
    out = tmp_path / "trace.ndjson"
    assert main(["scenario", "--name", "music-quick-play", "--seed", "42",
                 "--out", str(out)]) == 0
    assert out.read_bytes() == GOLDEN_TRACE.read_bytes()


def test_scenario_unknown_name_exits_2(tmp_path, capsys):
    rc = main(["scenario", "--name", "bogus", "--seed", "1",
               "--out", str(tmp_path / "x")])
    assert rc == 2
    assert "unknown scenario" in capsys.readouterr().err


def test_replay_matches_golden_log(tmp_path):
    out = tmp_path / "events.ndjson"
    rc = main(["replay", "--trace", str(GOLDEN_TRACE), "--out", str(out)])
    assert rc == 0
    assert out.read_bytes() == GOLDEN_EVENTS.read_bytes()


def test_replay_corrupt_trace_names_line(tmp_path, capsys):
    bad = tmp_path / "bad.ndjson"
    lines = GOLDEN_TRACE.read_text().splitlines()
    lines[3] = '{"not a frame": true}'
    bad.write_text("\n".join(lines) + "\n")
    rc = main(["replay", "--trace", str(bad), "--out", str(tmp_path / "out")])
    assert rc == 2
    assert "line 4" in capsys.readouterr().err


def test_replay_expect_goal_success(tmp_path, capsys):
    out = tmp_path / "events.ndjson"
    rc = main(["replay", "--trace", str(GOLDEN_TRACE), "--out", str(out),
               "--expect-goal", "music-quick-play"])
    assert rc == 0
    assert '"completion":true' in capsys.readouterr().out


def test_replay_expect_goal_failure_exits_3(tmp_path):
    # a trace that never opens the music app cannot reach the music goal
    from gazemenu.scenarios import generate_scenario
    from gazemenu.trace import write_trace

    trace = generate_scenario("fuzz-random", 42)
    path = tmp_path / "fuzz.ndjson"
    write_trace(trace, str(path))
    rc = main(["replay", "--trace", str(path), "--out", str(tmp_path / "o"),
               "--expect-goal", "music-quick-play"])
    assert rc == 3


def test_validate_ok(capsys):
    assert main(["validate", "--trace", str(GOLDEN_TRACE)]) == 0
    assert "ok:" in capsys.readouterr().out


def test_validate_rejects_garbage(tmp_path, capsys):
    bad = tmp_path / "garbage.ndjson"
    bad.write_text("not json\n")
    assert main(["validate", "--trace", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_replay_warns_on_config_digest_mismatch(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text('{"summon_duration": 0.5}\n')
    out = tmp_path / "events.ndjson"
    rc = main(["replay", "--trace", str(GOLDEN_TRACE), "--config", str(config),
               "--out", str(out)])
    assert rc == 0
    assert "config digest differs" in capsys.readouterr().err
