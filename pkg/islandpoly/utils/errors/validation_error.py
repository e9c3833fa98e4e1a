class ValidationError(Exception):
    """
    This exception is thrown when validating user input: graphs, maps,
    colorings, scripts and documents. It contains a message that is intended
    for the user.
    """

    def __init__(self,
                 *args,
                 attr: str | None = None,
                 msg: str | None = None):
        """
        Initialize a validation error.

        Args:
            *args: Args to pass to Exception().
            attr: The name of the attribute that failed validation.
            msg: The message to share with the user.
        """

        super().__init__(*args)
        self.attr: str | None = attr
        self.msg: str | None = msg

    def __str__(self) -> str:
        """
        Get a somewhat user-friendly string representation of this error for
        use in log messages. This includes both the attribute and message, if
        they're both present. If either is None, it's omitted.

        Returns:
            A string representation.
        """

        return (
                self.__class__.__name__ +
                (f' on {self.attr}' if self.attr else '') + ': ' +
                (self.msg if self.msg else 'no message given')
        )


class GraphError(ValidationError):
    """Invalid vertex index, edge id or edge endpoint."""

    pass


class MapError(ValidationError):
    """A rotation system that is not a valid connected oriented map."""

    pass


class IslandError(ValidationError):
    """An island that is disconnected or not contained in its host."""

    pass


class SizeLimitError(ValidationError):
    """Too many marked vertices to enumerate."""

    pass


class ColoringError(ValidationError):
    """A coloring that is not total and surjective on the marked vertices."""

    pass


class TransformError(ValidationError):
    """A graph transformation whose preconditions fail."""

    pass


class HypothesisError(ValidationError):
    """The hypotheses of an identity do not hold for the given operands."""

    pass


class RangeError(ValidationError):
    """Arguments of a closed formula outside its range."""

    pass


class ScriptError(ValidationError):
    """
    An operation script that can't be parsed or that refers to vertices or
    edges which don't exist when the step runs.
    """

    def __init__(self, *args, line: int | None = None, **kwargs):
        """
        Args:
            *args: Args to pass to ValidationError().
            line: The 1-based script line, if known.
            **kwargs: The attr and msg of the ValidationError.
        """

        super().__init__(*args, **kwargs)
        self.line: int | None = line

    def __str__(self) -> str:
        s = super().__str__()
        return s if self.line is None else f'{s} (line {self.line})'


class ParseError(ValidationError):
    """
    A text document (map, script or check file) with a syntax or
    validation problem at a particular location.
    """

    def __init__(self,
                 *args,
                 line: int,
                 column: int = 1,
                 **kwargs):
        """
        Args:
            *args: Args to pass to ValidationError().
            line: The 1-based line of the problem.
            column: The 1-based column of the problem. Defaults to 1.
            **kwargs: The attr and msg of the ValidationError.
        """

        super().__init__(*args, **kwargs)
        self.line: int = line
        self.column: int = column

    def __str__(self) -> str:
        return f'line {self.line}, column {self.column}: ' + (
            self.msg if self.msg else 'no message given'
        )
