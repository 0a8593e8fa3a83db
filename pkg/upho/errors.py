from typing import Any, Optional


class UphoError(Exception):
    """Базовая ошибка пакета; CLI превращает её в код выхода 2."""


class EmptyPoset(UphoError, ValueError):
    pass


class NonDenseIds(UphoError, ValueError):
    pass


class EdgeRankSkip(UphoError, ValueError):
    pass


class DanglingVertex(UphoError, ValueError):
    pass


class DuplicateEdge(UphoError, ValueError):
    pass


class InvalidEmbedding(UphoError, ValueError):
    pass


class VertexNotFound(UphoError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class InsufficientDepth(UphoError, ValueError):
    pass


class InvalidParameters(UphoError, ValueError):
    pass


class NonUnitConstantTerm(UphoError, ValueError):
    pass


class ParseError(UphoError, ValueError):
    pass


class ScheduleInvalid(UphoError, ValueError):
    pass


class MissingEmbedding(UphoError, ValueError):
    pass


class WidthLimitExceeded(UphoError):
    pass


class StructureError(UphoError):
    def __init__(self, message: str, vertex: Optional[Any] = None):
        super().__init__(message)
        self.vertex = vertex


class InsufficientSeries(UphoError, ValueError):
    pass


class SizeMismatch(UphoError, ValueError):
    pass


class BudgetExceeded(UphoError):
    pass


class InvalidRelation(UphoError, ValueError):
    pass


class IndexTooSmall(UphoError, ValueError):
    pass


class UnknownConstruction(UphoError, ValueError):
    pass
