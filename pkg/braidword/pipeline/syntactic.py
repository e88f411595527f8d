from ..braids import BraidWord, SyntacticGBase, process_word_syntactic
from .base import Pipeline


class SyntacticPipeline(Pipeline):
    """Braid moves on reduced free words; the hot path for equality."""

    NAME = "syn"

    def process(self, w: BraidWord) -> SyntacticGBase:
        return process_word_syntactic(w, pre_cancel=self.pre_cancel)

    def normal_form(self, w: BraidWord) -> SyntacticGBase:
        return self.process(w)
