from enum import Enum
from typing import Any, Dict, Optional


class ErrorCode(str, Enum):
    INPUT_INVALID = "INPUT_INVALID"
    CONTRACT_VIOLATION = "CONTRACT_VIOLATION"
    CONSISTENCY = "CONSISTENCY"
    NOT_REALIZABLE = "NOT_REALIZABLE"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    SCHEMA_MISMATCH = "SCHEMA_MISMATCH"


ERROR_MESSAGES = {
    ErrorCode.INPUT_INVALID: "The input is malformed or out of range.",
    ErrorCode.CONTRACT_VIOLATION: "The input does not satisfy the operation's structural precondition.",
    ErrorCode.CONSISTENCY: "Two independent computations disagree.",
    ErrorCode.NOT_REALIZABLE: "The sign pattern is not induced by any affine hyperplane.",
    ErrorCode.BUDGET_EXCEEDED: "The configured search budget was exhausted.",
    ErrorCode.SCHEMA_MISMATCH: "The file does not match the expected schema.",
}


class WorkbenchError(Exception):
    """Base class for every error the workbench raises on purpose.

    All of them are usage or resource errors from the command line's point
    of view, hence the shared exit code.
    """

    code: ErrorCode = ErrorCode.INPUT_INVALID
    exit_code: int = 2

    def __init__(self, message: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        self.message = message or ERROR_MESSAGES[self.code]
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error_code": self.code.value,
            "message": self.message,
            "details": self.details,
        }


class InputError(WorkbenchError):
    code = ErrorCode.INPUT_INVALID


class ContractViolationError(WorkbenchError):
    code = ErrorCode.CONTRACT_VIOLATION


class ConsistencyError(WorkbenchError):
    code = ErrorCode.CONSISTENCY


class NotRealizableError(WorkbenchError):
    code = ErrorCode.NOT_REALIZABLE


class BudgetExceededError(WorkbenchError):
    code = ErrorCode.BUDGET_EXCEEDED


class SchemaError(WorkbenchError):
    code = ErrorCode.SCHEMA_MISMATCH
