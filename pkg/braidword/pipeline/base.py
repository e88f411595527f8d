from typing import Union

from ..braids import BraidWord, SyntacticGBase
from ..errors import AmbientMismatchError
from ..paths import GBase
from ..utils import get_logger


class Pipeline:
    """
    A ProcessWord strategy. Subclasses fix the representation the g-base is
    held in while the braid moves are applied.
    """

    NAME = "base"

    def __init__(self, pre_cancel: bool = True):
        self.pre_cancel = pre_cancel
        self.logger = get_logger(__name__)

    def process(self, w: BraidWord) -> Union[SyntacticGBase, GBase]:
        raise NotImplementedError

    def normal_form(self, w: BraidWord) -> SyntacticGBase:
        raise NotImplementedError

    def equal(self, first: BraidWord, second: BraidWord) -> bool:
        if first.n != second.n:
            raise AmbientMismatchError(f"cannot compare braids on {first.n} and {second.n} strands")
        verdict = self.process(first) == self.process(second)
        self.logger.debug(f"{self.NAME}: '{first}' vs '{second}' on {first.n} strands -> {verdict}")
        return verdict
