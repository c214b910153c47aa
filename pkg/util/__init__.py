# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

__version__ = '0.1.0'
