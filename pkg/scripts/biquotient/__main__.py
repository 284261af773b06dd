"""Allow running as: python -m scripts.biquotient"""
from scripts.biquotient.runner import main

main()
