import hypothesis

hypothesis.settings.register_profile("repvol", deadline=None)
hypothesis.settings.load_profile("repvol")
