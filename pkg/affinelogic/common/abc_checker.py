import abc


class StructureChecker(abc.ABC):
    """
    StructureChecker is the base abstract class for the model-based checks of affinelogic. The core function
    ``check`` should be implemented and returns a ``dict`` report.

    Every checker compares two computations that must agree exactly on finite structures: the value of a formula
    in an ultramean against the weighted values in its factors, the two orders of an iterated integral, the values
    of formulas along a map between two structures, or the conclusion of an accepted proof against the models of
    its hypotheses. Reports list every disagreement found; an empty list is the expected outcome.
    """

    def __init__(self, sig, progress: bool = False, **kwargs):
        """

        Args:
            sig (Signature): The signature every structure and formula is written in.
            progress (bool): Show a ``tqdm`` progress bar over long sweeps. Defaults to ``False``.
        """
        self.sig = sig
        self.progress = progress

    @abc.abstractmethod
    def check(self, *args, **kwargs) -> dict:
        raise NotImplementedError
