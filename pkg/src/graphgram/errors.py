"""Exception types raised across the package."""


class GraphGrammarError(Exception):
    """Base class for every error raised by graphgram."""


class DuplicateNodeId(GraphGrammarError):
    pass


class DanglingEndpoint(GraphGrammarError):
    pass


class SelfLoopInInput(GraphGrammarError):
    pass


class MixedDirectedness(GraphGrammarError):
    pass


class UnknownEdge(GraphGrammarError, KeyError):
    pass


class TooLargeForOracle(GraphGrammarError):
    pass


class UnregisteredEdge(GraphGrammarError, KeyError):
    pass


class TypeMismatch(GraphGrammarError):
    pass


class InvalidMatching(GraphGrammarError):
    pass


class UndefinedNonTerminal(GraphGrammarError):
    pass


class DanglingPort(GraphGrammarError):
    pass


class UnknownType(GraphGrammarError, KeyError):
    pass


class InvalidParameters(GraphGrammarError, ValueError):
    pass


class UnresolvedConect(GraphGrammarError):
    pass


class ParseError(GraphGrammarError):
    """Malformed input text; ``line`` is 1-based, or None when not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
