import json
import os
from typing import Any, Optional

from hodgepack.utils import fs, humanize
from hodgepack.utils.logging import logger
from hodgepack.utils.rationals import format_value

__all__ = ['SummaryWriter', 'ConsoleWriter', 'JSONLWriter']


class SummaryWriter:
    """
    Base class for all result writers.
    """
    def set_verifier(self, verifier: Any) -> None:
        self.verifier = verifier
        self._set_verifier(verifier)

    def _set_verifier(self, verifier: Any) -> None:
        pass

    def add_result(self, result: Any) -> None:
        self._add_result(result)

    def _add_result(self, result: Any) -> None:
        pass

    def after_run(self) -> None:
        self._after_run()

    def _after_run(self) -> None:
        pass


class ConsoleWriter(SummaryWriter):
    """
    Write check results to the logger.
    """
    def _add_result(self, result: Any) -> None:
        text = '[{}] {} case(s) in {}'.format(
            result.name, result.cases, humanize.naturaldelta(result.seconds))
        if result.passed:
            logger.success(text + ': passed.')
        else:
            logger.error(text + ': {}.'.format(
                humanize.plural(len(result.failures), 'failure')))
            for failure in result.failures:
                logger.error('+ ' + failure)


class JSONLWriter(SummaryWriter):
    """
    Write check results to a JSONL file.
    """
    def __init__(self, save_dir: Optional[str] = None) -> None:
        self.save_dir = fs.normpath(save_dir or 'summary')

    def _set_verifier(self, verifier: Any) -> None:
        fs.makedir(self.save_dir)
        self.file = open(os.path.join(self.save_dir, 'results.jsonl'), 'a')

    def _add_result(self, result: Any) -> None:
        record = {'seed': self.verifier.seed, **result.to_dict()}
        self.file.write(json.dumps(format_value(record)) + '\n')
        self.file.flush()

    def _after_run(self) -> None:
        self.file.close()
