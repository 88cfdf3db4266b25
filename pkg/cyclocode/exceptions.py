class CyclocodeError(Exception):
    pass


class ConfigurationError(CyclocodeError):
    def __init__(self, *args, variable: str = None):
        self.variable = variable
        super().__init__(*args)


class FormatError(CyclocodeError):
    pass


class FieldError(CyclocodeError):
    def __init__(self, *args, order: int = None):
        self.order = order
        super().__init__(*args)


class ContextError(CyclocodeError):
    def __init__(self, *args, p: int = None, q: int = None, gcd: int = None):
        self.p = p
        self.q = q
        self.gcd = gcd
        super().__init__(*args)


class HypothesisError(CyclocodeError):
    def __init__(self, *args, condition: str = None):
        self.condition = condition
        super().__init__(*args)


class DecompositionError(CyclocodeError):
    def __init__(self, *args, label: str = None, values=()):
        self.label = label
        self.values = tuple(values)
        super().__init__(*args)


class ConstructionError(CyclocodeError):
    def __init__(self, *args, request=None):
        self.request = request
        super().__init__(*args)


class DistanceBudgetExceeded(CyclocodeError):
    def __init__(self, *args, lower: int = None, upper: int = None, certificate=None):
        self.lower = lower
        self.upper = upper
        self.certificate = certificate
        super().__init__(*args)

    @property
    def interval(self):
        return self.lower, self.upper


class ParameterError(CyclocodeError, ValueError):
    def __init__(self, *args, parameter: str = None):
        self.parameter = parameter
        super().__init__(*args)
