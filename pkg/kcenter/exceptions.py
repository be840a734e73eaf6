# kcenter/exceptions.py

from core.exceptions import LabError


class EmptyCenterSet(LabError):
    pass


class BudgetExceeded(LabError):
    """ The EPAS net outgrew KCLAB_EPAS_NET_CAP; epsilon is too small for the instance. """

    def __init__(self, net_size, cap, rho):
        super().__init__(f"net of {net_size} points at rho={rho} exceeds the cap of {cap}")
        self.net_size = net_size
        self.cap = cap
        self.rho = rho
