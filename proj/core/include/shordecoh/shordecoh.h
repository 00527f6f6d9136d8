// Copyright 2026 The shordecoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHORDECOH_SHORDECOH_H
#define SHORDECOH_SHORDECOH_H

#include "shordecoh/budget.h"
#include "shordecoh/errors.h"
#include "shordecoh/instance.h"
#include "shordecoh/kernel.h"
#include "shordecoh/numtheory.h"
#include "shordecoh/recovery.h"
#include "shordecoh/rng.h"
#include "shordecoh/sampler.h"
#include "shordecoh/spectrum.h"
#include "shordecoh/version.h"

#endif
