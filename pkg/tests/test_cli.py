import json

from cira.cli import cli

REFERENCE_TABLE_ROWS = [
    "| TC1 | is pushed      | not fails | shuts down     |",
    "| TC2 | not is pushed  | fails     | shuts down     |",
    "| TC3 | not is pushed  | not fails | not shuts down |",
]


class TestTestsuiteCommand:
    def test_table_output(self, runner, button_sentence):
        result = runner.invoke(cli, ["testsuite", button_sentence, "--format", "table"])
        assert result.exit_code == 0
        for row in REFERENCE_TABLE_ROWS:
            assert row in result.output
        assert "the red button | the power | the system" in result.output

    def test_non_causal_exits_3_with_reason_on_stderr(self, runner):
        result = runner.invoke(cli, ["testsuite", "The system shall be blue."])
        assert result.exit_code == 3
        assert "NOT_CAUSAL" in result.stderr
        assert result.stdout == ""

    def test_json_output_parses(self, runner, button_sentence):
        result = runner.invoke(cli, ["testsuite", button_sentence, "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert len(doc["cases"]) == 3

    def test_csv_output(self, runner, button_sentence):
        result = runner.invoke(cli, ["testsuite", button_sentence, "--format", "csv"])
        assert result.output.splitlines()[0] == "ID,the red button,the power,the system"


class TestInputHandling:
    def test_no_input_is_usage_error(self, runner):
        result = runner.invoke(cli, ["testsuite"])
        assert result.exit_code == 2

    def test_both_inputs_is_usage_error(self, runner, tmp_path, button_sentence):
        path = tmp_path / "reqs.txt"
        path.write_text("If A then B.\n")
        result = runner.invoke(cli, ["testsuite", button_sentence, "--file", str(path)])
        assert result.exit_code == 2

    def test_missing_file_is_usage_error(self, runner):
        result = runner.invoke(cli, ["testsuite", "--file", "/nonexistent.txt"])
        assert result.exit_code == 2
        assert "nonexistent" in result.stderr

    def test_batch_mode_prefixes_line_numbers(self, runner, tmp_path, button_sentence):
        path = tmp_path / "reqs.txt"
        path.write_text(f"{button_sentence}\n\nThe system shall be blue.\n")
        result = runner.invoke(cli, ["testsuite", "--file", str(path), "--format", "csv"])
        assert result.exit_code == 0
        assert "--- line 1:" in result.output
        assert "--- line 3:" in result.output
        assert "NOT_CAUSAL" in result.output  # inline, batch keeps going

    def test_out_writes_file(self, runner, tmp_path, button_sentence):
        out = tmp_path / "suite.json"
        result = runner.invoke(
            cli, ["testsuite", button_sentence, "--format", "json", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert json.loads(out.read_text())["cases"]


class TestOtherStages:
    def test_classify_table(self, runner, button_sentence):
        result = runner.invoke(cli, ["classify", button_sentence])
        assert result.exit_code == 0
        assert "causal: yes" in result.output

    def test_classify_non_causal_exits_zero(self, runner):
        result = runner.invoke(cli, ["classify", "The system shall be blue."])
        assert result.exit_code == 0
        assert "causal: no" in result.output

    def test_label_json(self, runner, button_sentence):
        result = runner.invoke(cli, ["label", button_sentence, "--format", "json"])
        labels = json.loads(result.output)
        assert {"label": "DISJUNCTION", "begin": 30, "end": 32} in labels

    def test_graph_table_shows_expression(self, runner, button_sentence):
        result = runner.invoke(cli, ["graph", button_sentence])
        assert "(C1 or C2)" in result.output

    def test_graph_non_causal_exits_3(self, runner):
        result = runner.invoke(cli, ["graph", "The system shall be blue."])
        assert result.exit_code == 3

    def test_pipeline_json_has_stages(self, runner, button_sentence):
        result = runner.invoke(cli, ["pipeline", button_sentence, "--format", "json"])
        doc = json.loads(result.output)
        assert list(doc)[:4] == ["classification", "labels", "graph", "suite"]

    def test_csv_rejected_outside_testsuite(self, runner, button_sentence):
        result = runner.invoke(cli, ["classify", button_sentence, "--format", "csv"])
        assert result.exit_code == 2


class TestCustomLexicon:
    def test_lexicon_option_changes_matching(self, runner, tmp_path):
        path = tmp_path / "cues.txt"
        path.write_text("conditional;provided that;0.9\nconsequence;then;0.6\n")
        sentence = "Provided that the key turns then the engine starts."
        default = runner.invoke(cli, ["classify", sentence])
        custom = runner.invoke(cli, ["classify", sentence, "--lexicon", str(path)])
        assert "causal: no" in default.output
        assert "causal: yes" in custom.output


class TestEvalCommand:
    def test_eval_writes_report_with_all_fields(self, runner, tmp_path):
        report_path = tmp_path / "report.json"
        result = runner.invoke(cli, ["eval", "--report", str(report_path)])
        assert result.exit_code == 0
        doc = json.loads(report_path.read_text())
        assert doc["classification"]["macro_f1"] == 1.0
        assert doc["suites"]["variable_accuracy"] == 1.0
        assert doc["suites"]["configuration_accuracy"] == 1.0
        assert len(doc["entries"]) == 20

    def test_eval_custom_corpus(self, runner, tmp_path):
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text(
            json.dumps(
                {
                    "id": "x1",
                    "text": "If A then B.",
                    "gold_causal": True,
                    "gold_variables": ["a", "b"],
                    "gold_configurations": [[True, True], [False, False]],
                }
            )
            + "\n"
        )
        result = runner.invoke(cli, ["eval", "--corpus", str(corpus)])
        assert result.exit_code == 0
        assert "macro F1" in result.output

    def test_eval_figures_written(self, runner, tmp_path):
        figures = tmp_path / "figs"
        result = runner.invoke(cli, ["eval", "--figures", str(figures)])
        assert result.exit_code == 0
        names = {p.name for p in figures.iterdir()}
        assert names == {
            "classification_metrics.png",
            "confusion_matrix.png",
            "suite_accuracy.png",
            "verdicts.csv",
        }

    def test_eval_corpus_parse_error_exits_2(self, runner, tmp_path):
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text("nonsense\n")
        result = runner.invoke(cli, ["eval", "--corpus", str(corpus)])
        assert result.exit_code == 2
        assert "line 1" in result.stderr


def test_json_output_matches_service_body(runner, client, button_sentence):
    # Shared renderer: CLI json bytes equal the HTTP response body.
    for subcommand, route in [
        ("classify", "/api/classify"),
        ("label", "/api/label"),
        ("graph", "/api/graph"),
        ("testsuite", "/api/testsuite"),
    ]:
        cli_result = runner.invoke(cli, [subcommand, button_sentence, "--format", "json"])
        response = client.post(route, json={"text": button_sentence})
        assert cli_result.stdout.encode("utf-8") == response.content, subcommand
