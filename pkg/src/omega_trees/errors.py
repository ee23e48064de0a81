"""Exception hierarchy.

``UsageError`` subclasses signal malformed input (CLI exit status 1);
``ContractError`` subclasses signal a domain contract that cannot be met for
otherwise well-formed input (CLI exit status 2).
"""


class OmegaTreesError(Exception):
    code = "Error"


class UsageError(OmegaTreesError):
    code = "UsageError"


class ContractError(OmegaTreesError):
    code = "ContractError"


class NotASequenceCode(UsageError):
    code = "NotASequenceCode"


class OracleError(ContractError):
    code = "OracleError"


class NonFiniteTree(UsageError):
    code = "NonFiniteTree"


class EmptyTree(UsageError):
    code = "EmptyTree"


class PrefixClosureViolation(ContractError):
    code = "PrefixClosureViolation"


class InvalidPoint(ContractError):
    code = "InvalidPoint"


class BudgetExceeded(ContractError):
    code = "BudgetExceeded"


class StreamExhausted(ContractError):
    code = "StreamExhausted"


class NotDescending(ContractError):
    code = "NotDescending"


class NotOrderPreserving(ContractError):
    code = "NotOrderPreserving"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAMember(ContractError):
    code = "NotAMember"


class NonBinaryAlphabet(UsageError):
    code = "NonBinaryAlphabet"


class NoPositiveMeasure(ContractError):
    code = "NoPositiveMeasure"


class NotInField(UsageError):
    code = "NotInField"


class InvalidOrder(UsageError):
    code = "InvalidOrder"


class FieldTooLarge(UsageError):
    code = "FieldTooLarge"


class InvalidAutomaton(UsageError):
    code = "InvalidAutomaton"
