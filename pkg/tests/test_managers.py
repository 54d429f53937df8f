"""Tests for the live display managers."""

from __future__ import annotations

import logging

from src.managers.live_manager import initialize_managers
from src.managers.log_manager import LoggerTable, LoggerTableHandler
from src.managers.progress_manager import ProgressManager, adjust_description


def test_logger_table_keeps_latest_rows():
    table = LoggerTable(max_rows=2)
    for index in range(3):
        table.log(f"Event {index}", "details")
    assert [row[1] for row in table.row_buffer] == ["Event 1", "Event 2"]


def test_handler_forwards_records():
    rows = []
    handler = LoggerTableHandler(lambda event, details: rows.append((event, details)))
    logger = logging.getLogger("suzuki-test")
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)
    try:
        logger.info("sweep of %d rows", 12)
        logger.debug("hidden")
    finally:
        logger.removeHandler(handler)
    assert rows == [("Test_managers", "sweep of 12 rows")]


def test_stage_hook_advances_overall_task():
    manager = ProgressManager(task_name="Stage", item_description="Stage")
    manager.add_overall_task("points q=8", num_tasks=1)
    hook = manager.stage_hook("counting")
    hook(1, 2)
    hook(2, 2)
    assert manager.overall_progress.tasks[-1].completed == 1
    assert manager.task_progress.tasks[0].finished


def test_stage_hook_without_overall_task():
    manager = ProgressManager(task_name="Stage", item_description="Stage")
    hook = manager.stage_hook("scan")
    hook(3, 3)
    assert manager.task_progress.tasks[0].completed == 3


def test_adjust_description():
    assert adjust_description("semigroup") == "semigroup"
    assert adjust_description("quantum q=1024") == "quantum q=10..."


def test_live_manager_routes_logging():
    live_manager = initialize_managers(quiet=True)
    with live_manager:
        assert live_manager.log_handler in logging.getLogger().handlers
        logging.info("inside the display")
    assert live_manager.log_handler not in logging.getLogger().handlers
    events = [row[1] for row in live_manager.logger_table.row_buffer]
    assert events[-1] == "Job ended"
