use clap::Parser;

fn main() {
    let cli = hopfpi_cli::Cli::parse();
    std::process::exit(hopfpi_cli::run(&cli));
}
