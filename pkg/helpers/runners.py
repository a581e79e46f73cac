from concurrent.futures import ProcessPoolExecutor

from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")


class ParallelRunner(object):
    """Runner for a batch of independent tasks. Each task is passed to the
    callable as its only argument; the results are returned in task order,
    no matter how many workers were used, so the merged output does not
    depend on scheduling.

    With ``workers`` equal to 1, tasks are run inline in the calling process
    (which is what you want for debugging and for tests). Otherwise, a process
    pool is used - ``func`` and the tasks then need to be picklable, which
    means ``func`` has to be a module-level function.

    Args:

        * ``func``: callable to be run for every task
        * ``workers``: number of worker processes
        * ``on_result``: optional callable, receives ``(index, task, result)`` as each task finishes, in task order"""

    def __init__(self, func, workers=1, on_result=None):
        if workers < 1:
            raise ValueError("ParallelRunner needs at least one worker, got {}".format(workers))
        self.func = func
        self.workers = workers
        self.on_result = on_result

    def run(self, tasks):
        """Runs the callable for all the tasks and returns the list of results.
        The first exception a task raises is propagated."""
        tasks = list(tasks)
        logger.debug("Running {} tasks with {} worker(s)".format(len(tasks), self.workers))
        results = []
        if self.workers == 1:
            for index, task in enumerate(tasks):
                results.append(self._collect(index, task, self.func(task)))
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                for index, result in enumerate(executor.map(self.func, tasks)):
                    results.append(self._collect(index, tasks[index], result))
        return results

    def _collect(self, index, task, result):
        if self.on_result is not None:
            self.on_result(index, task, result)
        return result
