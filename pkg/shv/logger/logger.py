import logging
import sys
import typing

SUCCESS = 25


class CustomFormatter(logging.Formatter):
    """Logging Formatter to add colors when writing to a terminal"""

    grey = '\033[90m'
    yellow = '\033[93m'
    white = '\33[97m'
    red = '\033[91m'
    green = '\033[92m'
    bold_red = '\033[91m\033[1m'
    reset = '\033[0m'

    custom_format_short = "%(asctime)s - %(name)s - %(message)s"

    FORMATS = {
        logging.DEBUG: grey,
        logging.INFO: white,
        SUCCESS: green,
        logging.WARNING: yellow,
        logging.ERROR: red,
        logging.CRITICAL: bold_red
    }

    def __init__(self, colored: bool = True) -> None:
        super().__init__(fmt=self.custom_format_short, datefmt='%Y-%m-%d %H:%M:%S')
        self.colored = colored

    def format(self, record: logging.LogRecord) -> str:
        """
        Formats passed record.
        """
        text = super(CustomFormatter, self).format(record)
        if not self.colored:
            return text
        if record.exc_info is not None:
            return f'\n{self.red}{text}{self.reset}\n'
        return f'{self.FORMATS.get(record.levelno, self.white)}{text}{self.reset}'


class CustomLogger(logging.Logger):
    """
    Logger writing records to stderr and machine-readable results to stdout
    """

    def __init__(self, name: str, level: int = logging.INFO):
        super().__init__(name)
        self._primary_handler = logging.StreamHandler(stream=sys.stderr)
        self._primary_handler.setLevel(level=level)
        self._primary_handler.setFormatter(CustomFormatter(colored=sys.stderr.isatty()))
        self.addHandler(self._primary_handler)
        self._output: typing.TextIO = sys.stdout
        logging.addLevelName(SUCCESS, 'SUCCESS')

    def set_verbosity(self, level: int) -> None:
        """
        Raises or lowers the level of records that reach the terminal
        """
        self._primary_handler.setLevel(level=level)

    def redirect(self, records: typing.TextIO, output: typing.TextIO) -> None:
        """
        Points records and direct output at other streams, used by the tests to capture both
        """
        self._primary_handler.setStream(records)
        self._output = output

    def progress_bar(self,  # type: ignore
                     iteration: int,
                     total: int,
                     level: int = logging.INFO,
                     prefix: str = '',
                     suffix: str = '',
                     length: int = 40,
                     *args, **kwargs) -> None:
        """
        Call in a loop to draw a progress bar over the verification cases
        @params:
            iteration   - Required  : current iteration (Int)
            total       - Required  : total iterations (Int)
            level       - Optional  : logging level (Int)
            prefix      - Optional  : prefix string (Str)
            suffix      - Optional  : suffix string (Str)
            length      - Optional  : character length of bar (Int)
        """
        if total <= 0 or self._primary_handler.level > level:
            return
        filled_length = min(length, length * iteration // total)
        bar = '#' * filled_length + '-' * (length - filled_length)
        self._primary_handler.terminator = '\n' if iteration >= total else '\r'
        self._log(level, f'\r{prefix} |{bar}| {iteration}/{total} {suffix}', args, **kwargs)
        self._primary_handler.flush()
        self._primary_handler.terminator = '\n'

    def success(self, msg, *args, **kwargs):  # type: ignore
        """
        Log 'msg % args' with severity 'SUCCESS'.
        """
        if self.isEnabledFor(SUCCESS):
            self._log(SUCCESS, msg, args, **kwargs)

    def direct(self, msg: str, end: str = '\n') -> None:
        """
        Writes a message to the output stream without formatting or level checks.
        For passing out machine-readable output.
        :param msg - message string
        :param end - terminator
        """
        self._output.write(f'{msg}{end}')
        self._output.flush()
