import sys
import inspect


class GengegAnalysisException(Exception):
    def __init__(self, error_message, error_details: sys = sys):
        super().__init__(str(error_message))
        self.error_message = error_message
        _, _, exc_tb = error_details.exc_info()

        if exc_tb is not None:
            while exc_tb.tb_next is not None:
                exc_tb = exc_tb.tb_next
            self.line_num = exc_tb.tb_lineno
            self.file_name = exc_tb.tb_frame.f_code.co_filename
        else:
            # raised directly, not while handling another exception
            caller = inspect.currentframe().f_back
            self.line_num = caller.f_lineno if caller is not None else None
            self.file_name = caller.f_code.co_filename if caller is not None else None

    def __str__(self):
        return "Error occured in python script name [{0}] line number [{1}] error message [{2}]".format(
            self.file_name, self.line_num, str(self.error_message)
            )


class DomainError(GengegAnalysisException, ValueError):
    """A precondition or a hypothesis of the underlying result does not hold."""


class ComputationError(GengegAnalysisException, ArithmeticError):
    """Overflow, non-finite samples, solver failure or a failed cross-check."""
