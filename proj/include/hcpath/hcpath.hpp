// Copyright 2026 The hcpath Authors
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

#include "hcpath/anatomy.hpp"
#include "hcpath/blocks.hpp"
#include "hcpath/certificate.hpp"
#include "hcpath/common.hpp"
#include "hcpath/constructor.hpp"
#include "hcpath/engine.hpp"
#include "hcpath/experiment.hpp"
#include "hcpath/extract_j.hpp"
#include "hcpath/generators.hpp"
#include "hcpath/host.hpp"
#include "hcpath/interaction.hpp"
#include "hcpath/io.hpp"
#include "hcpath/oracle.hpp"
#include "hcpath/paths.hpp"
#include "hcpath/split.hpp"
#include "hcpath/split_state.hpp"
#include "hcpath/subcube.hpp"
#include "hcpath/subgraph.hpp"
