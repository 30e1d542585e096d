"""Bounded worker pool for oracle cross-checks."""
import asyncio
import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

from src.config import Config
from src.errors import GuardExceededError

logger = logging.getLogger(__name__)

Outcome = Tuple[str, str, Any]  # (task name, "success" | "error", result or exception)


@dataclass
class OracleMetrics:
    """Metrics for the oracle pool."""
    total_tasks: int = 0
    completed_tasks: int = 0
    failed_tasks: int = 0
    current_workers: int = 0


@dataclass(frozen=True)
class OracleTask:
    index: int
    name: str
    fn: Callable[[], Any]


class OraclePool:
    """Runs blocking oracle computations on worker threads, at most ``max_workers`` at a time.

    Outcomes are returned in submission order regardless of completion order.
    """

    def __init__(self, config: Config):
        self.config = config
        self.metrics = OracleMetrics()
        self.workers: List[asyncio.Task] = []
        self.task_queue: Optional[asyncio.Queue] = None
        self.outcomes: List[Optional[Outcome]] = []
        logger.debug(f"OraclePool initialized: max_workers={config.max_workers}")

    async def start(self, worker_count: int):
        """Start the workers."""
        self.task_queue = asyncio.Queue()
        count = max(1, min(worker_count, self.config.max_workers))
        for worker_id in range(1, count + 1):
            self.workers.append(asyncio.create_task(self._worker(worker_id)))
        self.metrics.current_workers = count

    async def stop(self):
        """Wait for the queue to drain, then cancel all workers."""
        await self.task_queue.join()
        for worker in self.workers:
            worker.cancel()
        if self.workers:
            await asyncio.gather(*self.workers, return_exceptions=True)
        self.workers.clear()
        self.metrics.current_workers = 0

    async def submit(self, name: str, fn: Callable[[], Any]):
        """Submit a task to the queue."""
        task = OracleTask(len(self.outcomes), name, fn)
        self.outcomes.append(None)
        self.metrics.total_tasks += 1
        await self.task_queue.put(task)

    async def _worker(self, worker_id: int):
        """Worker coroutine."""
        logger.debug(f"Worker {worker_id} started")
        while True:
            try:
                task = await self.task_queue.get()
            except asyncio.CancelledError:
                break
            try:
                result = await asyncio.to_thread(task.fn)
                self.outcomes[task.index] = (task.name, "success", result)
                self.metrics.completed_tasks += 1
            except GuardExceededError as e:
                self.outcomes[task.index] = (task.name, "error", e)
                self.metrics.failed_tasks += 1
                logger.info(f"Worker {worker_id} skipped {task.name}: {e}")
            except Exception as e:
                self.outcomes[task.index] = (task.name, "error", e)
                self.metrics.failed_tasks += 1
                logger.error(f"Worker {worker_id} error in {task.name}: {e}")
            finally:
                self.task_queue.task_done()
        logger.debug(f"Worker {worker_id} stopped")

    async def run_all(self, tasks: Sequence[Tuple[str, Callable[[], Any]]]) -> List[Outcome]:
        await self.start(len(tasks))
        for name, fn in tasks:
            await self.submit(name, fn)
        await self.stop()
        return list(self.outcomes)


def run_oracle_tasks(config: Config, tasks: Sequence[Tuple[str, Callable[[], Any]]]) -> List[Outcome]:
    """Synchronous entry point: run the tasks on a fresh pool and return ordered outcomes."""
    if not tasks:
        return []
    return asyncio.run(OraclePool(config).run_all(tasks))
