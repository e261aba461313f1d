/*
 * Copyright 2026 otlab contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header.

#ifndef OTLAB_OTLAB_HPP
#define OTLAB_OTLAB_HPP

#include "otlab/classical.hpp"
#include "otlab/error.hpp"
#include "otlab/isometry.hpp"
#include "otlab/json_io.hpp"
#include "otlab/matrix.hpp"
#include "otlab/measure.hpp"
#include "otlab/metrics.hpp"
#include "otlab/rng.hpp"
#include "otlab/sampling.hpp"
#include "otlab/space.hpp"
#include "otlab/transforms.hpp"
#include "otlab/transport.hpp"
#include "otlab/verify.hpp"

#endif  // OTLAB_OTLAB_HPP
