
def step_259(cfg):
    v0_s259 = []
    for v1_s259 in range(len(v2_s259)):
        v3_s259 = v2_s259[v1_s259]
        if v4_s259(v3_s259):
            v0_s259.append(v3_s259)
    return cfg

def step_490(cfg):
    v0_s490 = []
    for v1_s490 in range(len(v2_s490)):
        v3_s490 = v2_s490[v1_s490]
        if v4_s490(v3_s490):
            v0_s490.append(v3_s490)
    return cfg

def step_721(cfg):
    v0_s721 = []
    for v1_s721 in range(len(v2_s721)):
        v3_s721 = v2_s721[v1_s721]
        if v4_s721(v3_s721):
            v0_s721.append(v3_s721)
    return cfg

def step_41(cfg):
    v0_s41 = []
    for v1_s41 in range(len(v2_s41)):
        if v3_s41(v2_s41[v1_s41]):
            v0_s41 += [v2_s41[v1_s41]]
    return cfg

def step_272(cfg):
    v0_s272 = []
    for v1_s272 in range(len(v2_s272)):
        if v3_s272(v2_s272[v1_s272]):
            v0_s272 += [v2_s272[v1_s272]]
    return cfg

def step_503(cfg):
    v0_s503 = []
    for v1_s503 in range(len(v2_s503)):
        if v3_s503(v2_s503[v1_s503]):
            v0_s503 += [v2_s503[v1_s503]]
    return cfg

def step_734(cfg):
    v0_s734 = []
    for v1_s734 in range(len(v2_s734)):
        if v3_s734(v2_s734[v1_s734]):
            v0_s734 += [v2_s734[v1_s734]]
    return cfg

def step_54(cfg):
    v0_s54 = []
    for v1_s54 in range(len(v2_s54)):
        if v3_s54(v2_s54[v1_s54]):
            v0_s54 = v0_s54 + [v2_s54[v1_s54]]
    return cfg

def step_285(cfg):
    v0_s285 = []
    for v1_s285 in range(len(v2_s285)):
        if v3_s285(v2_s285[v1_s285]):
            v0_s285 = v0_s285 + [v2_s285[v1_s285]]
    return cfg

def step_516(cfg):
    v0_s516 = []
    for v1_s516 in range(len(v2_s516)):
        if v3_s516(v2_s516[v1_s516]):
            v0_s516 = v0_s516 + [v2_s516[v1_s516]]
    return cfg

def step_747(cfg):
    v0_s747 = []
    for v1_s747 in range(len(v2_s747)):
        if v3_s747(v2_s747[v1_s747]):
            v0_s747 = v0_s747 + [v2_s747[v1_s747]]
    return cfg

def step_67(cfg):
    v0_s67 = []
    for v1_s67 in range(len(v2_s67)):
        v3_s67 = v2_s67[v1_s67]
        if v4_s67(v3_s67):
            v0_s67.append(v3_s67)
    return cfg
