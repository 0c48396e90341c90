"""Module containing tests for the logging utility functions"""
import logging
import os
import tempfile
from unittest import TestCase, main

from cubicfold.utils.logging import remove_file_handlers, setup_rotating_file_logger

_LONG_MESSAGE = 'claim failed ' * 200


class TestLoggingUtilities(TestCase):
    """Tests for the logging utility functions"""

    def setUp(self) -> None:
        """Initialize some common variables"""
        self.folder = tempfile.TemporaryDirectory()
        self.log_file_path = os.path.join(self.folder.name, 'error.log')
        self.log_backup_file_path = os.path.join(self.folder.name, 'error.log.1')
        self.logger = logging.getLogger('cubicfold-test')

    def test_setup_rotating_file_logger(self):
        """
        should make the logger use a file that rotates when a given size is reached
        """
        max_bytes = 4000
        setup_rotating_file_logger(logger=self.logger, file_path=self.log_file_path, max_bytes=max_bytes)
        self.assertFalse(os.path.isfile(self.log_backup_file_path))

        self.logger.error(_LONG_MESSAGE)
        self.logger.error(_LONG_MESSAGE)
        self.assertTrue(os.path.isfile(self.log_backup_file_path))
        self.assertLessEqual(os.path.getsize(self.log_file_path), max_bytes)

    def test_only_errors_reach_the_file(self):
        """
        should keep records below ERROR out of the file
        """
        setup_rotating_file_logger(logger=self.logger, file_path=self.log_file_path)
        self.logger.warning('just a warning')
        self.logger.error('a real failure')

        with open(self.log_file_path) as log_file:
            content = log_file.read()

        self.assertNotIn('just a warning', content)
        self.assertIn('a real failure', content)

    def tearDown(self) -> None:
        """Clean up"""
        remove_file_handlers(self.logger)
        self.folder.cleanup()


if __name__ == '__main__':
    main()
