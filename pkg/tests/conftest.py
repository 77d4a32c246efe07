from hypothesis import settings

# exact algebra: per-example cost varies with word length, so no wall-clock deadline
settings.register_profile("bforder", deadline=None)
settings.load_profile("bforder")
