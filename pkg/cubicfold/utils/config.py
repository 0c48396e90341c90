"""Utility functions that read configuration from the environment (.env supported)"""
import os
from typing import Optional

DEFAULT_ENUMERATION_BUDGET = 10 ** 9


def get_enumeration_budget() -> int:
    """Returns the cap on enumeration work units"""
    budget = os.getenv('CUBICFOLD_BUDGET', None)

    if budget is None or budget == '':
        return DEFAULT_ENUMERATION_BUDGET

    return int(budget)


def get_default_threads() -> int:
    """Returns the default number of worker processes for point enumeration"""
    threads = os.getenv('CUBICFOLD_THREADS', None)

    if threads is None or threads == '':
        return os.cpu_count() or 1

    return max(1, int(threads))


def get_log_file_path() -> Optional[str]:
    """Returns the path of the error log file if one is configured"""
    file_path = os.getenv('CUBICFOLD_LOG_FILE', None)

    if file_path == '':
        return None

    return file_path


def get_claim_timeout() -> Optional[int]:
    """Returns the number of seconds each claim may run for, if configured"""
    seconds = os.getenv('CUBICFOLD_CLAIM_TIMEOUT', None)

    if seconds is None or seconds == '':
        return None

    return int(seconds)
