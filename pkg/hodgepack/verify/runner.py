import time
from typing import List, Optional

import tqdm

from hodgepack.exception import HodgepackError
from hodgepack.utils import humanize
from hodgepack.utils.config import Config
from hodgepack.utils.logging import logger
from hodgepack.verify.check import Check, Checks
from hodgepack.verify.summary import CheckResult, Summary
from hodgepack.verify.writers import ConsoleWriter, JSONLWriter, SummaryWriter

__all__ = ['Verifier']


class Verifier:
    """
    Runs a sequence of checks case by case and reports every result to the
    summary writers.
    """
    def __init__(self, configs: Config, *, seed: int = 0) -> None:
        self.configs = configs
        self.seed = seed

    def run_with_defaults(self,
                          checks: List[Check],
                          *,
                          save_dir: Optional[str] = None) -> Summary:
        writers: List[SummaryWriter] = [ConsoleWriter()]
        if save_dir is not None:
            writers.append(JSONLWriter(save_dir))
        return self.run(checks, writers=writers)

    def run(self,
            checks: List[Check],
            *,
            writers: Optional[List[SummaryWriter]] = None) -> Summary:
        self.checks = checks if isinstance(checks, Checks) else Checks(checks)
        self.writers = writers or []
        self.summary = Summary()

        try:
            for writer in self.writers:
                writer.set_verifier(self)
            self.summary.set_verifier(self)
            self.checks.set_verifier(self)

            logger.info(f'Running {humanize.plural(len(self.checks), "check")} '
                        f'with seed {self.seed}.')
            run_time = time.perf_counter()
            for check in self.checks:
                self.summary.add_result(self.run_check(check))

            passed = sum(result.passed for _, result in self.summary.items())
            text = '{}/{} checks passed in {}.'.format(
                passed, len(self.checks),
                humanize.naturaldelta(time.perf_counter() - run_time))
            if self.summary.passed:
                logger.success(text)
            else:
                logger.error(text)
        finally:
            for writer in self.writers:
                writer.after_run()
        return self.summary

    def run_check(self, check: Check) -> CheckResult:
        result = CheckResult(check.name)
        check_time = time.perf_counter()
        cases = check.cases()
        for case in tqdm.tqdm(cases, desc=check.name, ncols=0, leave=False):
            try:
                check.run_case(case)
            except HodgepackError as e:
                result.failures.append(f'{case}: {e}')
            result.cases += 1
        try:
            result.details = check.finalize()
        except HodgepackError as e:
            result.failures.append(str(e))
        result.seconds = time.perf_counter() - check_time
        return result
