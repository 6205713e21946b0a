
def step_117(cfg):
    v0_s117 = []
    for v1_s117 in range(len(v2_s117)):
        if v3_s117(v2_s117[v1_s117]):
            v0_s117 = v0_s117 + [v2_s117[v1_s117]]
    return cfg

def step_348(cfg):
    v0_s348 = []
    for v1_s348 in range(len(v2_s348)):
        if v3_s348(v2_s348[v1_s348]):
            v0_s348 = v0_s348 + [v2_s348[v1_s348]]
    return cfg

def step_579(cfg):
    v0_s579 = []
    for v1_s579 in range(len(v2_s579)):
        if v3_s579(v2_s579[v1_s579]):
            v0_s579 = v0_s579 + [v2_s579[v1_s579]]
    return cfg

def step_810(cfg):
    v0_s810 = []
    for v1_s810 in range(len(v2_s810)):
        if v3_s810(v2_s810[v1_s810]):
            v0_s810 = v0_s810 + [v2_s810[v1_s810]]
    return cfg

def step_130(cfg):
    v0_s130 = []
    for v1_s130 in range(len(v2_s130)):
        v3_s130 = v2_s130[v1_s130]
        if v4_s130(v3_s130):
            v0_s130.append(v3_s130)
    return cfg

def step_361(cfg):
    v0_s361 = []
    for v1_s361 in range(len(v2_s361)):
        v3_s361 = v2_s361[v1_s361]
        if v4_s361(v3_s361):
            v0_s361.append(v3_s361)
    return cfg

def step_592(cfg):
    v0_s592 = []
    for v1_s592 in range(len(v2_s592)):
        v3_s592 = v2_s592[v1_s592]
        if v4_s592(v3_s592):
            v0_s592.append(v3_s592)
    return cfg

def step_823(cfg):
    v0_s823 = []
    for v1_s823 in range(len(v2_s823)):
        v3_s823 = v2_s823[v1_s823]
        if v4_s823(v3_s823):
            v0_s823.append(v3_s823)
    return cfg

def step_143(cfg):
    v0_s143 = []
    for v1_s143 in range(len(v2_s143)):
        if v3_s143(v2_s143[v1_s143]):
            v0_s143 += [v2_s143[v1_s143]]
    return cfg

def step_374(cfg):
    v0_s374 = []
    for v1_s374 in range(len(v2_s374)):
        if v3_s374(v2_s374[v1_s374]):
            v0_s374 += [v2_s374[v1_s374]]
    return cfg

def step_605(cfg):
    v0_s605 = []
    for v1_s605 in range(len(v2_s605)):
        if v3_s605(v2_s605[v1_s605]):
            v0_s605 += [v2_s605[v1_s605]]
    return cfg

def step_836(cfg):
    v0_s836 = []
    for v1_s836 in range(len(v2_s836)):
        if v3_s836(v2_s836[v1_s836]):
            v0_s836 += [v2_s836[v1_s836]]
    return cfg
