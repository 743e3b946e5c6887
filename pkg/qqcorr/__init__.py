"""
qqcorr

Correlation dynamics of a qubit-qutrit state family under dephasing and
amplitude-damping noise: negativity, mutual information, classical
correlation and quantum discord over decay-time sweeps.
"""

__version__ = "1.0.0"
