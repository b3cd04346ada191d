"""Error types shared by the whole package."""


class InputError(ValueError):
    """An argument or file violates a documented precondition."""


class FileFormatError(InputError):
    """A structured input file is malformed; message carries path and line number."""

    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = str(path)
        self.lineno = lineno
        self.reason = message
