__version__ = "0.1.0"
__author__ = "qrac-lab contributors"
__credits__ = "qrac-lab"
