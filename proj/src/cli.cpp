namespace d4pole {}
