// Copyright 2026 The gwfield Authors
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


#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gwfield/error.hpp"

namespace {

using gwfield_cli::json;

int exit_code(gwf::ErrorKind kind) {
    switch (kind) {
        case gwf::ErrorKind::InvalidArgument:
            return 2;
        case gwf::ErrorKind::Numerical:
            return 3;
        case gwf::ErrorKind::Io:
            return 4;
    }
    return 1;
}

const char *kind_name(gwf::ErrorKind kind) {
    switch (kind) {
        case gwf::ErrorKind::InvalidArgument:
            return "invalid_argument";
        case gwf::ErrorKind::Numerical:
            return "numerical";
        case gwf::ErrorKind::Io:
            return "io";
    }
    return "internal";
}

int report(int code, const char *kind, const std::string &message, const std::string &context) {
    const json err{{"code", code}, {"kind", kind}, {"message", message}, {"context", context}};
    std::cerr << err.dump() << '\n';
    return code;
}

struct Bound {
    gwfield_cli::Command command;
    CLI::App *app = nullptr;
    std::unique_ptr<gwfield_cli::ConfigBuilder> config;
    std::string out;
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gwfield: wave, statistical and vacuum-field computations"};
    app.set_version_flag("--version", std::string("gwfield ") + GWFIELD_VERSION);
    app.require_subcommand(1);

    std::vector<gwfield_cli::Command> commands;
    for (auto group : {gwfield_cli::wave_commands(), gwfield_cli::quantum_commands(),
                       gwfield_cli::thermal_commands()}) {
        for (auto &c : group) {
            commands.push_back(std::move(c));
        }
    }
    std::vector<Bound> bound(commands.size());
    for (std::size_t i = 0; i < commands.size(); ++i) {
        bound[i].command = commands[i];
        bound[i].app = app.add_subcommand(commands[i].name, commands[i].description);
        bound[i].app->add_option("--out", bound[i].out, "output directory (must not exist)");
        bound[i].config = std::make_unique<gwfield_cli::ConfigBuilder>(bound[i].app, commands[i].keys);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return report(2, "invalid_argument", e.what(), "");
    }

    for (auto &b : bound) {
        if (!b.app->parsed()) {
            continue;
        }
        std::filesystem::path created;
        const auto discard = [&created] {
            if (!created.empty()) {
                std::error_code ec;
                std::filesystem::remove_all(created, ec);
            }
        };
        try {
            const json cfg = b.config->resolve();
            gwfield_cli::RunContext ctx(b.command.name, cfg, b.out);
            created = ctx.dir();
            const int code = b.command.run(ctx, cfg);
            ctx.finish();
            created.clear();
            std::printf("%s\n", ctx.dir().string().c_str());
            return code;
        } catch (const gwf::Error &e) {
            discard();
            return report(exit_code(e.kind()), kind_name(e.kind()), e.what(), e.context());
        } catch (const json::exception &e) {
            discard();
            return report(2, "invalid_argument", std::string("bad value type: ") + e.what(), "");
        } catch (const std::exception &e) {
            discard();
            return report(1, "internal", e.what(), "");
        }
    }
    return report(2, "invalid_argument", "no subcommand given", "");
}
