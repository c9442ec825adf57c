"""
Common Exceptions thrown by the consensus library
"""

class ExperimentSpecError(Exception):
    """This exception will be raised if an experiment specification handed to the driver is invalid"""

class UnknownGraphFamilyError(Exception):
    """This exception will be raised if an unsupported graph family is passed as a parameter"""
