
def step_688(cfg):
    v0_s688 = []
    for v1_s688 in range(len(v2_s688)):
        v3_s688 = v2_s688[v1_s688]
        if v4_s688(v3_s688):
            v0_s688.append(v3_s688)
    return cfg

def step_8(cfg):
    v0_s8 = []
    for v1_s8 in range(len(v2_s8)):
        if v3_s8(v2_s8[v1_s8]):
            v0_s8.append(v2_s8[v1_s8])
    return cfg

def step_239(cfg):
    v0_s239 = []
    for v1_s239 in range(len(v2_s239)):
        if v3_s239(v2_s239[v1_s239]):
            v0_s239 += [v2_s239[v1_s239]]
    return cfg

def step_470(cfg):
    v0_s470 = []
    for v1_s470 in range(len(v2_s470)):
        if v3_s470(v2_s470[v1_s470]):
            v0_s470 += [v2_s470[v1_s470]]
    return cfg

def step_701(cfg):
    v0_s701 = []
    for v1_s701 in range(len(v2_s701)):
        if v3_s701(v2_s701[v1_s701]):
            v0_s701 += [v2_s701[v1_s701]]
    return cfg

def step_21(cfg):
    v0_s21 = []
    for v1_s21 in range(len(v2_s21)):
        if v3_s21(v2_s21[v1_s21]):
            v0_s21.append(v2_s21[v1_s21])
    return cfg

def step_252(cfg):
    v0_s252 = []
    for v1_s252 in range(len(v2_s252)):
        if v3_s252(v2_s252[v1_s252]):
            v0_s252 = v0_s252 + [v2_s252[v1_s252]]
    return cfg

def step_483(cfg):
    v0_s483 = []
    for v1_s483 in range(len(v2_s483)):
        if v3_s483(v2_s483[v1_s483]):
            v0_s483 = v0_s483 + [v2_s483[v1_s483]]
    return cfg

def step_714(cfg):
    v0_s714 = []
    for v1_s714 in range(len(v2_s714)):
        if v3_s714(v2_s714[v1_s714]):
            v0_s714 = v0_s714 + [v2_s714[v1_s714]]
    return cfg

def step_34(cfg):
    v0_s34 = []
    for v1_s34 in range(len(v2_s34)):
        v3_s34 = v2_s34[v1_s34]
        if v4_s34(v3_s34):
            v0_s34.append(v3_s34)
    return cfg

def step_265(cfg):
    v0_s265 = []
    for v1_s265 in range(len(v2_s265)):
        v3_s265 = v2_s265[v1_s265]
        if v4_s265(v3_s265):
            v0_s265.append(v3_s265)
    return cfg

def step_496(cfg):
    v0_s496 = []
    for v1_s496 in range(len(v2_s496)):
        v3_s496 = v2_s496[v1_s496]
        if v4_s496(v3_s496):
            v0_s496.append(v3_s496)
    return cfg
