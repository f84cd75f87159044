import logging

import pytest

from swatchlink.helpers.logger import Logger


class TestLogger:
    @pytest.fixture
    def logger(self):
        return Logger(save_logs=False, verbose=False)

    def test_log_records_message(self, logger):
        logger.log("Dehn filling k*l k")
        assert len(logger.logs) == 1
        entry = logger.logs[0]
        assert entry["msg"] == "Dehn filling k*l k"
        assert entry["level"] == "INFO"
        assert entry["time"] >= 0

    def test_log_levels(self, logger):
        logger.log("slow", logging.WARNING)
        logger.log("broken", logging.ERROR)
        assert [e["level"] for e in logger.logs] == ["WARNING", "ERROR"]

    def test_source_is_calling_class(self, logger):
        class Caller:
            def run(self, log):
                log.log("from caller")

        Caller().run(logger)
        assert logger.logs[0]["source"] == "Caller"

    def test_verbose_toggle(self, logger):
        assert logger.verbose is False
        logger.verbose = True
        assert logger.verbose is True
        logger.verbose = False
        assert logger.verbose is False

    def test_save_logs_is_off(self, logger):
        assert logger.save_logs is False
