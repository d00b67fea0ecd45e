#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "fmm/container.hpp"
#include "fmm/error.hpp"
#include "fmm/metrics.hpp"
#include "fmm/netpbm.hpp"
#include "fmm/quantize.hpp"

namespace fs = std::filesystem;

namespace fmm::cli {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string psnr_text(const std::optional<double>& psnr) {
  return psnr ? fixed(*psnr, 4) : std::string("lossless");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return kIo;
    case ErrorKind::Modulus: return kUsage;
    default: return kFormat;
  }
}

int report(const Error& e, std::ostream& err) {
  err << "fmm: " << to_string(e.kind()) << " error: " << e.what() << '\n';
  return exit_code_for(e.kind());
}

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::exists(a, ec) && fs::exists(b, ec)) return fs::equivalent(a, b, ec);
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

// Runs `body`, translating codec errors into exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return report(e, err);
  } catch (const std::exception& e) {
    err << "fmm: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace

int run_compress(const fs::path& in, const fs::path& out, Modulus k, bool verbose, Streams io) {
  if (same_file(in, out)) {
    io.err << "fmm: input and output must be different files\n";
    return kUsage;
  }
  return guarded(io.err, [&] {
    const RasterImage image = read_netpbm(read_file(in));
    const std::vector<std::uint8_t> packed = compress(image, k);
    write_file(out, packed);
    io.out << "original_bytes=" << image.sample_count() << " compressed_bytes=" << packed.size()
           << " cr=" << fixed(compression_ratio(image.sample_count(), packed.size()), 2) << '\n';
    if (verbose) {
      const ContainerLayout layout = inspect(packed);
      for (std::size_t ch = 0; ch < layout.channels.size(); ++ch) {
        io.out << "channel " << ch << ": stream_bytes=" << layout.channels[ch].stream_bytes
               << " stream_bits=" << layout.channels[ch].stream_bits << '\n';
      }
      const std::size_t constant = static_cast<std::size_t>(std::count_if(
          layout.blocks.begin(), layout.blocks.end(), [](const BlockRecord& b) { return b.fields.repetition; }));
      io.out << "blocks=" << layout.blocks.size() << " repeated=" << constant << " modulus=" << k.value()
             << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run_decompress(const fs::path& in, const fs::path& out, Streams io) {
  if (same_file(in, out)) {
    io.err << "fmm: input and output must be different files\n";
    return kUsage;
  }
  return guarded(io.err, [&] {
    const RasterImage image = decompress(read_file(in));
    write_file(out, write_netpbm(image));
    return static_cast<int>(kOk);
  });
}

int run_compare(const fs::path& a, const fs::path& b, Streams io) {
  return guarded(io.err, [&] {
    const RasterImage first = read_netpbm(read_file(a));
    const RasterImage second = read_netpbm(read_file(b));
    const QualityReport r = evaluate(first, second);
    auto join = [](const std::vector<double>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fixed(v[i], 4);
      return s;
    };
    io.out << "mse=" << fixed(r.mse, 6) << '\n'
           << "rmse=" << fixed(r.rmse, 6) << '\n'
           << "psnr=" << psnr_text(r.psnr) << (r.psnr ? " dB" : "") << '\n'
           << "sigma_a=" << join(r.sigma_original) << '\n'
           << "sigma_b=" << join(r.sigma_reconstructed) << '\n';
    return static_cast<int>(kOk);
  });
}

int run_inspect(const fs::path& in, Streams io) {
  return guarded(io.err, [&] {
    const std::vector<std::uint8_t> data = read_file(in);
    const ContainerLayout layout = inspect(data);
    const FmmHeader& h = layout.header;
    io.out << "FMM1 version=" << int{kFormatVersion} << " modulus=" << h.modulus.value()
           << " width=" << h.width << " height=" << h.height << " channels=" << int{h.channels} << '\n';
    for (const BlockRecord& b : layout.blocks) {
      const std::size_t raw_bits = b.rows * b.cols * 8;
      io.out << "ch=" << b.channel << " block=" << b.index << " at=" << b.block_row << ',' << b.block_col
             << " size=" << b.rows << 'x' << b.cols << " min=" << int{b.fields.min_index}
             << " rep=" << (b.fields.repetition ? 1 : 0);
      if (!b.fields.repetition) {
        io.out << " max=" << int{b.fields.max_delta} << " width=" << b.fields.delta_width();
      }
      io.out << " bits=" << b.bits;
      if (!b.fields.repetition) {
        // Delta-only ratio: raw block bits over the packed deltas.
        io.out << " delta_bits=" << b.fields.delta_bits() << " raw_bits=" << raw_bits
               << " payload_cr=" << fixed(compression_ratio(raw_bits, b.fields.delta_bits()), 2);
      } else {
        io.out << " raw_bits=" << raw_bits;
      }
      io.out << " cr=" << fixed(compression_ratio(raw_bits, b.bits), 2) << '\n';
    }
    for (std::size_t ch = 0; ch < layout.channels.size(); ++ch) {
      io.out << "channel " << ch << ": stream_bytes=" << layout.channels[ch].stream_bytes
             << " stream_bits=" << layout.channels[ch].stream_bits << '\n';
    }
    const std::size_t original = std::size_t{h.width} * h.height * h.channels;
    io.out << "total_bytes=" << data.size() << " original_bytes=" << original
           << " cr=" << fixed(compression_ratio(original, data.size()), 2) << '\n';
    return static_cast<int>(kOk);
  });
}

int run_bench(const fs::path& dir, Modulus k, Streams io) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    io.err << "fmm: " << dir.string() << " is not a directory\n";
    return kIo;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  io.out << "name\tpsnr_db\tcr\n";
  std::size_t ok = 0;
  std::size_t finite = 0;
  double psnr_sum = 0.0;
  double cr_sum = 0.0;
  for (const fs::path& file : files) {
    try {
      const RasterImage image = read_netpbm(read_file(file));
      const std::vector<std::uint8_t> packed = compress(image, k);
      const RasterImage decoded = decompress(packed);
      const std::optional<double> p = psnr(image, decoded);
      const double cr = compression_ratio(image.sample_count(), packed.size());
      io.out << file.filename().string() << '\t' << psnr_text(p) << '\t' << fixed(cr, 4) << '\n';
      ++ok;
      cr_sum += cr;
      if (p) {
        ++finite;
        psnr_sum += *p;
      }
    } catch (const Error& e) {
      io.err << "fmm: skipping " << file.filename().string() << ": " << e.what() << '\n';
    }
  }
  if (ok == 0) {
    io.err << "fmm: no readable images in " << dir.string() << '\n';
    return kIo;
  }
  io.out << "mean\t" << (finite ? fixed(psnr_sum / static_cast<double>(finite), 4) : std::string("lossless"))
         << '\t' << fixed(cr_sum / static_cast<double>(ok), 4) << '\n';
  return kOk;
}

}  // namespace fmm::cli
