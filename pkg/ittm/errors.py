from typing import *


class IttmError(Exception):
    pass


class OrdinalSyntaxError(IttmError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f'{message} at position {position}')
        self.position = position


class RealLiteralError(IttmError, ValueError):
    pass


class GeneratorError(IttmError):
    pass


class AsmSyntaxError(IttmError, ValueError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f'line {line}, column {column}: {message}')
        self.line = line
        self.column = column


class ValidationError(IttmError):
    def __init__(self, violations: Sequence[str]):
        super().__init__('; '.join(violations))
        self.violations = list(violations)


class MacroError(IttmError):
    pass


class OracleError(IttmError):
    pass


class InadmissibleInput(IttmError, ValueError):
    pass
