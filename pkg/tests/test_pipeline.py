import pytest
from hypothesis import given

from braidword.braids import BraidWord, parse_braid, process_word_syntactic
from braidword.errors import AmbientMismatchError
from braidword.paths import GBase
from braidword.pipeline import (
    PIPELINE_REGISTRY,
    GeometricPipeline,
    Pipeline,
    SyntacticPipeline,
    list_supported_pipelines,
    load_pipeline,
    register_pipeline,
)
from tests.strategies import braid_word_pairs, braid_words


@pytest.mark.parametrize(
    "name, cls",
    [
        ("syn", SyntacticPipeline),
        ("SYNTACTIC", SyntacticPipeline),
        ("geo", GeometricPipeline),
        ("geometric", GeometricPipeline),
    ],
)
def test_load_pipeline(name, cls):
    pipeline = load_pipeline(name, pre_cancel=False)
    assert isinstance(pipeline, cls)
    assert pipeline.pre_cancel is False


def test_unknown_pipeline():
    with pytest.raises(ValueError, match="Unsupported pipeline type"):
        load_pipeline("burau")


def test_register_pipeline():
    class OraclePipeline(SyntacticPipeline):
        NAME = "oracle"

    register_pipeline("Oracle", OraclePipeline)
    try:
        assert isinstance(load_pipeline("oracle"), OraclePipeline)
        assert "oracle" in list_supported_pipelines()
    finally:
        PIPELINE_REGISTRY.pop("oracle")
    assert "oracle" not in list_supported_pipelines()


def test_base_pipeline_is_abstract():
    with pytest.raises(NotImplementedError):
        Pipeline().normal_form(BraidWord.identity(2))


def test_process_representations():
    w = parse_braid("1 2", 3)
    assert isinstance(load_pipeline("geo").process(w), GBase)
    assert load_pipeline("syn").process(w) == process_word_syntactic(w)


@given(braid_words(max_length=15))
def test_normal_forms_agree(w):
    assert load_pipeline("geo").normal_form(w) == load_pipeline("syn").normal_form(w)


@given(braid_word_pairs(max_length=8))
def test_verdict_ignores_pipeline_and_pre_cancel(pair):
    first, second = pair
    verdicts = {
        load_pipeline(name, pre_cancel=pre_cancel).equal(first, second)
        for name in ("syn", "geo")
        for pre_cancel in (True, False)
    }
    assert len(verdicts) == 1


def test_equal_checks_strands():
    with pytest.raises(AmbientMismatchError):
        load_pipeline("geo").equal(parse_braid("1", 2), parse_braid("1", 3))
