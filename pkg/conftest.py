"""Configure Django so pytest can collect the apps' tests.py modules."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'kclab.settings')
django.setup()
