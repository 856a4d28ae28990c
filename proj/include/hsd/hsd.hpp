// Copyright 2026 The hsdkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header.

#include "hsd/annotator.hpp"
#include "hsd/corpus.hpp"
#include "hsd/csv.hpp"
#include "hsd/error.hpp"
#include "hsd/iob.hpp"
#include "hsd/metrics.hpp"
#include "hsd/naive_bayes.hpp"
#include "hsd/normalizer.hpp"
#include "hsd/records.hpp"
#include "hsd/remote_annotator.hpp"
#include "hsd/resample.hpp"
#include "hsd/spans.hpp"
#include "hsd/stats.hpp"
#include "hsd/tasks.hpp"
#include "hsd/text.hpp"
#include "hsd/utf8.hpp"
#include "hsd/weak_label.hpp"
