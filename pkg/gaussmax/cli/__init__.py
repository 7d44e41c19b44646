# Copyright (c) gauss-maxima developers. All rights reserved.
