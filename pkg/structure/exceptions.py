# structure/exceptions.py

from core.exceptions import LabError


class InvalidScale(LabError):
    pass


class BallTooLarge(LabError):
    def __init__(self, ball_size, cap):
        super().__init__(f"ball of {ball_size} points exceeds the exact cover cap of {cap}")
        self.ball_size = ball_size
        self.cap = cap
