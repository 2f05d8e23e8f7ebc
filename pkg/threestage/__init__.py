# -*- coding: utf-8 -*-

APP_NAME = "threestage"

# Current threestage version

VERSION = "1.0.0"
