from ..braids import BraidWord, SyntacticGBase, gbase_to_syntactic, process_word_geometric
from ..paths import GBase
from .base import Pipeline


class GeometricPipeline(Pipeline):
    """
    Holds the g-base as path lists and routes the two touched paths through
    the codec at every letter. Stands in for a direct list-rewriting
    algorithm in comparisons against the syntactic pipeline.
    """

    NAME = "geo"

    def process(self, w: BraidWord) -> GBase:
        return process_word_geometric(w, pre_cancel=self.pre_cancel)

    def normal_form(self, w: BraidWord) -> SyntacticGBase:
        return gbase_to_syntactic(self.process(w))
