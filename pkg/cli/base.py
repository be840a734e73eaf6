# cli/base.py

import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import LabError

logger = logging.getLogger(__name__)

INPUT_ERROR, PROPERTY_VIOLATION = 1, 2


class LabCommand(BaseCommand):
    """
    Base for the lab's commands. Exit codes: 0 when every check passes,
    1 for bad input (usage, parse, validation, library errors) and 2 when a
    checked property is violated. Subclasses implement `run`.
    """

    serializer_class = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(INPUT_ERROR, f"{parser.prog}: error: {message}\n")
            raise CommandError(f"Error: {message}", returncode=INPUT_ERROR)

        parser.error = error
        return parser

    def handle(self, *args, **options):
        params = self.validated(options)
        try:
            self.run(**params)
        except LabError as exc:
            logger.info(f"{self.__module__}: {type(exc).__name__}: {exc}")
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=INPUT_ERROR)

    def run(self, **params):
        raise NotImplementedError

    def validated(self, options):
        fields = self.serializer_class().fields
        data = {name: options[name] for name in fields if options.get(name) is not None}
        serializer = self.serializer_class(data=data)
        if not serializer.is_valid():
            problems = '; '.join(
                f"{field}: {' '.join(str(m) for m in messages)}"
                for field, messages in serializer.errors.items()
            )
            raise CommandError(f"invalid options: {problems}", returncode=INPUT_ERROR)
        return dict(serializer.validated_data)

    def read(self, path):
        try:
            with open(path, encoding='utf-8') as handle:
                return handle.read()
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc.strerror}", returncode=INPUT_ERROR)

    def write(self, path, text):
        try:
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(text)
        except OSError as exc:
            raise CommandError(f"cannot write {path}: {exc.strerror}", returncode=INPUT_ERROR)

    def emit(self, line):
        self.stdout.write(line)

    def finish(self, results):
        """ Prints one line per check and fails with exit 2 if any did not pass. """
        for result in results:
            self.emit(result.line())
        failed = [result.name for result in results if not result.passed]
        if failed:
            raise CommandError(f"{len(failed)} check(s) failed: {', '.join(failed)}", returncode=PROPERTY_VIOLATION)
