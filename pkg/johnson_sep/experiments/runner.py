"""Experiment runner - timing, error capture and status for every report."""
import logging
import time
from contextlib import contextmanager
from typing import Any, Iterator

from ..errors import JohnsonSepError, SaturationLimitError
from ..models.report import ExperimentReport, ReportStatus

logger = logging.getLogger(__name__)


@contextmanager
def experiment(name: str, **inputs: Any) -> Iterator[ExperimentReport]:
    """
    Yield a fresh report and settle its status on exit.

    Saturation overruns become ``inconclusive``; any other toolkit error
    becomes ``error`` with the message recorded. Other exceptions propagate.
    """
    report = ExperimentReport(experiment=name, inputs=inputs)
    start = time.perf_counter()
    try:
        yield report
    except SaturationLimitError as e:
        logger.warning("%s inconclusive: %s", name, e)
        report.status = ReportStatus.INCONCLUSIVE
        report.message = str(e)
        report.outputs["saturation"] = {"passes": e.passes, "rank": e.rank}
    except JohnsonSepError as e:
        logger.warning("%s failed: %s", name, e)
        report.status = ReportStatus.ERROR
        report.message = f"{type(e).__name__}: {e}"
    finally:
        report.duration_seconds = round(time.perf_counter() - start, 6)
    report.finalize()
    logger.info("%s finished with status %s", name, report.status.value)
