use clap::Parser;

fn main() {
    let cli = koszul2::cli::Cli::parse();
    std::process::exit(koszul2::cli::run(cli));
}
