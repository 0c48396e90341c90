"""Module with a timeout guard for long-running claims"""
import signal
from typing import Optional


class ClaimTimeoutError(Exception):
    """Raised when a claim check runs past its allotted time"""
    pass


class TimeoutManager:
    """
    Context manager that raises ClaimTimeoutError if the wrapped block
    runs for longer than `seconds`. A `seconds` of None disables the guard.
    Relies on SIGALRM so it only works in the main thread
    """

    def __init__(self, seconds: Optional[int], error_message: Optional[str] = None):
        if error_message is None:
            error_message = f'Timeout after {seconds}s.'
        self.seconds = seconds
        self.error_message = error_message
        self._previous_handler = None

    def handle_timeout(self, signum, frame):
        raise ClaimTimeoutError(self.error_message)

    def __enter__(self):
        if self.seconds:
            self._previous_handler = signal.signal(signal.SIGALRM, self.handle_timeout)
            signal.alarm(self.seconds)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.seconds:
            signal.alarm(0)
            signal.signal(signal.SIGALRM, self._previous_handler or signal.SIG_DFL)
